#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "filterlab/autfilter.hpp"
#include "groups.hpp"

using namespace filterlab;

namespace {

const MonoidElem s0({0}), s1({1});

std::vector<AutMap> with_sidecar(const PcGroup& G, const std::string& name)
{
    auto gens = central_automorphisms(G);
    auto extra = load_automorphisms(G, std::string(FILTERLAB_DATA_DIR) + "/corpus/misc/" + name + ".aut");
    gens.insert(gens.end(), extra.begin(), extra.end());
    return gens;
}

}  // namespace

TEST_CASE("applying automorphisms")
{
    auto G = fixtures::d8();
    const auto g1 = G.generator(0), g3 = G.generator(2);
    AutMap a = make_aut(G, {G.multiply(g1, g3), G.generator(1), g3});
    CHECK(aut_commutator(G, g1, a) == g3);
    for (const auto& x : G.elements()) CHECK(aut_commutator(G, x, identity_aut(G)).is_identity());
    for (const auto& g : G.elements()) {
        AutMap inner = inner_aut(G, g);
        CHECK(aut_failures(G, inner).empty());
        for (const auto& x : G.elements()) CHECK(aut_commutator(G, x, inner) == G.commutator(x, g));
    }
    CHECK(compose(G, a, inverse(G, a)) == identity_aut(G));
    // g1 -> g2 breaks g1^2 = 1, since g2 has order 4.
    CHECK_FALSE(aut_failures(G, {{G.generator(1), G.generator(1), g3}}).empty());
    CHECK_THROWS_AS(make_aut(G, {g3, g3, g3}), Error);
}

TEST_CASE("automorphism sidecars")
{
    auto D = fixtures::d8();
    CHECK(load_automorphisms(D, std::string(FILTERLAB_DATA_DIR) + "/corpus/misc/d8.aut").size() == 2);
    auto H = fixtures::h27();
    auto auts = load_automorphisms(H, std::string(FILTERLAB_DATA_DIR) + "/corpus/misc/h27.aut");
    REQUIRE(auts.size() == 3);
    CHECK(auts[2].images[0] == H.generator(1));
    CHECK(auts[2].images[2] == H.power(H.generator(2), 2));
    CHECK_THROWS_AS(parse_automorphisms(D, "aut: g1 -> g2\n"), ParseError);
    CHECK_THROWS_AS(parse_automorphisms(D, "aut: g7 -> g2\n"), ParseError);
    CHECK(parse_automorphisms(D, "# none\n").empty());
}

TEST_CASE("central automorphisms")
{
    CHECK(central_automorphisms(fixtures::h27()).size() == 2);
    CHECK(central_automorphisms(fixtures::elementary(3, 2)).size() == 4);
    // Over GF(2) the diagonal transvections x -> x + x_i e_i are singular.
    CHECK(central_automorphisms(fixtures::elementary(2, 2)).size() == 2);
    CHECK(central_automorphisms(fixtures::elementary(3, 1)).size() == 1);
    CHECK(central_automorphisms(fixtures::elementary(2, 1)).empty());
    for (const char* name : {"d8", "h27", "d8xq8"}) {
        auto G = load_pcgroup(std::string(FILTERLAB_DATA_DIR) + "/corpus/misc/" + name + ".pcg");
        for (const auto& a : central_automorphisms(G)) CHECK(aut_failures(G, a).empty());
    }
}

TEST_CASE("Delta membership on the Heisenberg group")
{
    auto G = fixtures::h27();
    auto f = lower_central(G);
    auto auts = load_automorphisms(G, std::string(FILTERLAB_DATA_DIR) + "/corpus/misc/h27.aut");
    CHECK(delta_membership(G, auts[0], f, s0));
    CHECK(delta_membership(G, auts[0], f, s1));
    CHECK_FALSE(delta_membership(G, auts[2], f, s1));
    CHECK(delta_membership(G, auts[2], f, s0));
    auto rep = delta_layer_dims(G, {identity_aut(G), inner_aut(G, G.generator(2)), auts[0]}, f);
    CHECK(rep.failures.empty());
    CHECK(rep.maximal_grades[0] == std::vector<MonoidElem>{f.box()});
    CHECK(rep.maximal_grades[1] == std::vector<MonoidElem>{f.box()});
    CHECK(rep.maximal_grades[2] == std::vector<MonoidElem>{s1});
}

TEST_CASE("a non-invariant filter is rejected")
{
    auto G = fixtures::d8();
    // <g1> is not normal, so conjugation by g2 moves it.
    Filter f(GradedMonoid(1, OrderKind::pointwise), MonoidElem({2}),
             {G.whole(), subgroup_from_gens(G, {G.generator(0)}), G.trivial()});
    CHECK_THROWS_AS(delta_membership(G, inner_aut(G, G.generator(1)), f, s1), Error);
}

TEST_CASE("induced derivations")
{
    auto G = fixtures::h27();
    auto f = lower_central(G);
    auto L = graded_lie_ring(G, f);
    auto auts = central_automorphisms(G);
    REQUIRE(!auts.empty());
    auto D = induced_derivation(G, auts[0], s1, L, f);
    REQUIRE(D.count(s1));
    CHECK(gf::rank(D.at(s1)) == 1);
    CHECK(check_derivation_law(L, D, s1).empty());
    for (const auto& [u, m] : induced_derivation(G, identity_aut(G), s1, L, f)) CHECK(m.is_zero());
    CHECK_THROWS_AS(induced_derivation(G, auts[0], s0, L, f), Error);
    auto swap = load_automorphisms(G, std::string(FILTERLAB_DATA_DIR) + "/corpus/misc/h27.aut")[2];
    CHECK_THROWS_AS(induced_derivation(G, swap, s1, L, f), Error);
}

TEST_CASE("induced derivations do not depend on coset representatives")
{
    std::mt19937 rng(11);
    for (const char* name : {"h27", "d8"}) {
        auto G = load_pcgroup(std::string(FILTERLAB_DATA_DIR) + "/corpus/misc/" + name + ".pcg");
        auto f = lower_central(G);
        auto L = graded_lie_ring(G, f);
        for (const auto& a : with_sidecar(G, name)) {
            if (!delta_membership(G, a, f, s1)) continue;
            auto D = induced_derivation(G, a, s1, L, f);
            for (const auto& [u, m] : D) {
                const auto& sec = L.components().at(u).section;
                const auto& target = L.components().at(u + s1).section;
                auto bottom = subgroup_elements(G, sec.bottom());
                for (int i = 0; i < sec.dim(); ++i) {
                    GroupElem x = G.multiply(sec.reps()[i], bottom[rng() % bottom.size()]);
                    CHECK(target.coords(G, aut_commutator(G, x, a)) == m.row(i));
                }
            }
        }
    }
}

TEST_CASE("Delta filter laws with central and sidecar automorphisms")
{
    for (const char* name : {"h27", "d8"}) {
        INFO(name);
        auto G = load_pcgroup(std::string(FILTERLAB_DATA_DIR) + "/corpus/misc/" + name + ".pcg");
        auto f = lower_central(G);
        auto L = graded_lie_ring(G, f);
        auto gens = with_sidecar(G, name);
        auto rep = delta_layer_dims(G, gens, f);
        CHECK(rep.failures.empty());
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = 0; j < gens.size(); ++j)
                for (const auto& s : f.grades()) {
                    if (!delta_membership(G, gens[i], f, s) || !delta_membership(G, gens[j], f, s)) continue;
                    CHECK(delta_membership(G, compose(G, gens[i], gens[j]), f, s));
                    CHECK(delta_membership(G, inverse(G, gens[i]), f, s));
                }
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = 0; j < gens.size(); ++j) {
                const AutMap c = aut_bracket(G, gens[i], gens[j]);
                for (const auto& s : rep.maximal_grades[i])
                    for (const auto& t : rep.maximal_grades[j])
                        for (size_t k = 0; k < f.grades().size(); ++k)
                            for (const auto& x : f.values()[k].gens())
                                CHECK(membership(G, aut_commutator(G, x, c), f.at(s + t + f.grades()[k])));
            }
        for (size_t i = 0; i < gens.size(); ++i)
            for (const auto& s : rep.maximal_grades[i]) {
                if (s.is_zero()) continue;
                CHECK(check_derivation_law(L, induced_derivation(G, gens[i], s, L, f), s).empty());
            }
    }
}

TEST_CASE("automorphisms trivial on every layer lie in a positive Delta term")
{
    for (const char* name : {"h27", "d8"}) {
        auto G = load_pcgroup(std::string(FILTERLAB_DATA_DIR) + "/corpus/misc/" + name + ".pcg");
        auto f = lower_central(G);
        auto L = graded_lie_ring(G, f);
        auto gens = with_sidecar(G, name);
        for (const auto& g : G.elements()) gens.push_back(inner_aut(G, g));
        for (const auto& a : gens) {
            bool trivial = true;
            for (const auto& [u, comp] : L.components())
                for (const auto& x : comp.section.reps())
                    if (!gf::vec_is_zero(comp.section.coords(G, aut_commutator(G, x, a)))) trivial = false;
            if (trivial) CHECK(delta_membership(G, a, f, s1));
        }
    }
}

TEST_CASE("Delta filter laws across corpus groups")
{
    for (const auto& path : corpus_files("order16")) {
        auto G = load_pcgroup(path);
        auto f = lower_central(G);
        auto gens = central_automorphisms(G);
        for (int k = 0; k < G.rank(); ++k) gens.push_back(inner_aut(G, G.generator(k)));
        CHECK_MESSAGE(delta_layer_dims(G, gens, f, 2).failures.empty(), path);
    }
}
