#include "corpus.hpp"
#include "doctest.h"
#include "filterlab/lie.hpp"
#include "filterlab/oracle.hpp"
#include "groups.hpp"

using namespace filterlab;

static const MonoidElem g1({1}), g2({2});

TEST_CASE("Lie ring of the exponent-p series of D8")
{
    auto G = fixtures::d8();
    auto L = graded_lie_ring(G, exponent_p_lcs(G));
    CHECK(L.dim(g1) == 2);
    CHECK(L.dim(g2) == 1);
    const Bimap* b = L.bracket(g1, g1);
    REQUIRE(b);
    // Oracle: commutators of the coset representatives, read off the table.
    auto T = oracle::cayley_from_pc(G);
    const auto& reps = L.components().at(g1).section.reps();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            int c = T.comm(static_cast<int>(G.index_of(reps[i])), static_cast<int>(G.index_of(reps[j])));
            CHECK(b->at(i, j, 0) == (c == T.identity ? 0 : 1));
        }
    CHECK(b->at(0, 1, 0) == 1);
    CHECK(b->at(0, 0, 0) == 0);
}

TEST_CASE("Lie ring of H27 and of an abelian group")
{
    auto H = fixtures::h27();
    auto L = graded_lie_ring(H, exponent_p_lcs(H));
    CHECK(L.dim(g1) == 2);
    CHECK(L.dim(g2) == 1);
    const Bimap* b = L.bracket(g1, g1);
    REQUIRE(b);
    CHECK(b->at(0, 1, 0) != 0);
    CHECK((b->at(0, 1, 0) + b->at(1, 0, 0)) % 3 == 0);

    auto E = fixtures::elementary(3, 3);
    auto LE = graded_lie_ring(E, exponent_p_lcs(E));
    CHECK(LE.components().size() == 1);
    CHECK(LE.dim(g1) == 3);
    CHECK(LE.bracket(g1, g1) == nullptr);
}

TEST_CASE("non-elementary-abelian factors are rejected")
{
    auto C4 = fixtures::c4();
    CHECK_THROWS_WITH_AS(graded_lie_ring(C4, lower_central(C4)), doctest::Contains("grade (1)"), Error);
}

TEST_CASE("shuffle")
{
    Bimap one(1, 1, 1, 5);
    one.at(0, 0, 0) = 3;
    CHECK(shuffle(one).at(0, 0, 0) == 3);
    Bimap sym(2, 2, 1, 3);
    sym.at(0, 1, 0) = 1;
    sym.at(1, 0, 0) = 2;
    auto s = shuffle(sym);
    CHECK(s.dU == 2);
    CHECK(s.dV == 1);
    CHECK(s.dW == 2);
    CHECK(s.at(0, 0, 1) == 1);
    CHECK(s.at(1, 0, 0) == 2);
    CHECK(shuffle(Bimap(2, 3, 4, 2)).is_zero());
}

TEST_CASE("module of D8 over its exponent-p Lie ring")
{
    auto G = fixtures::d8();
    auto f = exponent_p_lcs(G);
    auto l = shift(upper_central(G));
    auto L = graded_lie_ring(G, f);
    auto M = graded_module(G, f, l, L);
    CHECK(M.dim(g1) == 1);
    CHECK(M.dim(g2) == 2);
    const Bimap* a = M.action(g1, g1);
    REQUIRE(a);
    CHECK(a->dU == 2);
    CHECK(a->dV == 1);
    CHECK(a->dW == 2);
    // Every nonzero x in L_1 moves the dual of L^1 nontrivially.
    for (int x = 1; x < 4; ++x) CHECK_FALSE(gf::vec_is_zero(a->apply({x & 1, x >> 1}, {1})));
    CHECK(check_module_law(L, M).empty());
}

TEST_CASE("module of H27 and of an abelian group")
{
    auto H = fixtures::h27();
    auto f = exponent_p_lcs(H);
    auto L = graded_lie_ring(H, f);
    auto M = graded_module(H, f, shift(upper_central(H)), L);
    const Bimap* a = M.action(g1, g1);
    REQUIRE(a);
    for (int i = 0; i < 2; ++i) CHECK_FALSE(gf::vec_is_zero(a->apply(i == 0 ? gf::Vec{1, 0} : gf::Vec{0, 1}, {1})));

    auto E = fixtures::elementary(2, 3);
    auto fe = exponent_p_lcs(E);
    auto ME = graded_module(E, fe, shift(upper_central(E)), graded_lie_ring(E, fe));
    for (const auto& [k, b] : ME.actions()) CHECK(b.is_zero());
}

TEST_CASE("product module of H27 x C3")
{
    auto dp = direct_product(fixtures::h27(), fixtures::elementary(3, 1));
    auto f = product_filter(dp, {exponent_p_lcs(dp.factors[0]), exponent_p_lcs(dp.factors[1])});
    auto l = product_layering(dp, {shift(upper_central(dp.factors[0])), shift(upper_central(dp.factors[1]))});
    REQUIRE(verify_sift(dp.group, f, l).empty());
    auto L = graded_lie_ring(dp.group, f);
    auto M = graded_module(dp.group, f, l, L);
    CHECK(check_jacobi(L).empty());
    CHECK(check_module_law(L, M).empty());
}

TEST_CASE("fault injection")
{
    auto H = fixtures::h27();
    auto f = exponent_p_lcs(H);
    auto L = graded_lie_ring(H, f);
    auto L2 = L;
    auto& b = L2.brackets_mut().at({g1, g1});
    b.at(0, 1, 0) = (b.at(0, 1, 0) + 1) % 3;
    CHECK_FALSE(check_alternating(L2).empty());
    // The module law is vacuous in class 2, so flip signs on a class-3 group.
    auto D16 = load_pcgroup(std::string(FILTERLAB_DATA_DIR) + "/corpus/order81/c3wrc3.pcg");
    auto fd = exponent_p_lcs(D16);
    auto LD = graded_lie_ring(D16, fd);
    auto M = graded_module(D16, fd, shift(upper_exponent_p(D16)), LD);
    REQUIRE(check_module_law(LD, M).empty());
    auto M2 = M;
    for (auto& [k, a] : M2.actions_mut())
        for (int& x : a.data) x = (3 - x) % 3;
    CHECK_FALSE(check_module_law(LD, M2).empty());
    CHECK(check_jacobi(GradedLieRing()).empty());
}

TEST_CASE("Lie laws on the whole corpus")
{
    for (const auto& path : all_corpus_files()) {
        CAPTURE(path);
        auto G = load_pcgroup(path);
        auto f = exponent_p_lcs(G);
        auto L = graded_lie_ring(G, f);
        CHECK(check_jacobi(L).empty());
        CHECK(check_alternating(L).empty());
        auto M = graded_module(G, f, shift(upper_exponent_p(G)), L);
        CHECK(check_module_law(L, M).empty());
        CHECK(check_integral_module(G, lower_central(G), shift(upper_central(G)), 100, 7).empty());
    }
}

TEST_CASE("duals of abelian sections")
{
    auto C4 = fixtures::c4();
    auto d = dual_abelian(C4, C4.whole(), C4.trivial());
    CHECK(d.invariants == std::vector<long long>{4});
    auto x = d.coords(C4, C4.generator(0));
    CHECK(d.pairing(x, x) == std::pair<long long, long long>{1, 4});
    CHECK(d.pairing(d.coords(C4, C4.generator(1)), x) == std::pair<long long, long long>{1, 2});

    auto E = fixtures::elementary(3, 2);
    auto de = dual_abelian(E, E.whole(), E.trivial());
    CHECK(de.invariants == std::vector<long long>{3, 3});
    CHECK(de.pairing({1, 2}, {1, 1}) == std::pair<long long, long long>{0, 1});

    auto P = direct_product(fixtures::elementary(2, 1), C4).group;
    CHECK(dual_abelian(P, P.whole(), P.trivial()).invariants == std::vector<long long>{2, 4});
    CHECK_THROWS(dual_abelian(fixtures::d8(), fixtures::d8().whole(), fixtures::d8().trivial()));
}

TEST_CASE("upper central strata have the order of their duals")
{
    for (const auto& path : all_corpus_files()) {
        auto G = load_pcgroup(path);
        auto z = upper_central(G);
        for (size_t i = 1; i < z.values().size(); ++i) {
            auto d = dual_abelian(G, z.values()[i], z.values()[i - 1]);
            CHECK(d.order() == subgroup_order(G, z.values()[i]) / subgroup_order(G, z.values()[i - 1]));
        }
    }
}
