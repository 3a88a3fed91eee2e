#include "doctest.h"
#include "filterlab/oracle.hpp"
#include "filterlab/series.hpp"
#include "groups.hpp"

using namespace filterlab;
using V = std::vector<long long>;

TEST_CASE("central series of small groups")
{
    auto G = fixtures::d8();
    CHECK(orders(G, lower_central(G)) == V{8, 8, 2, 1});
    CHECK(orders(G, upper_central(G)) == V{1, 2, 8});
    CHECK(orders(G, exponent_p_lcs(G)) == V{8, 8, 2, 1});
    auto Q = fixtures::q8();
    CHECK(orders(Q, upper_central(Q)) == V{1, 2, 8});
    auto C4 = fixtures::c4();
    CHECK(orders(C4, exponent_p_lcs(C4)) == V{4, 4, 2, 1});
    CHECK(orders(C4, lower_central(C4)) == V{4, 4, 1});
    auto E = fixtures::elementary(3, 2);
    CHECK(orders(E, lower_central(E)) == V{9, 9, 1});
    CHECK(orders(E, upper_central(E)) == V{1, 9});
    CHECK(orders(E, exponent_p_lcs(E)) == V{9, 9, 1});
    auto HH = direct_product(fixtures::h27(), fixtures::h27()).group;
    CHECK(orders(HH, lower_central(HH)) == V{729, 729, 9, 1});
}

TEST_CASE("series match the oracle")
{
    for (auto G : {fixtures::d8(), fixtures::q8(), fixtures::h27(), direct_product(fixtures::d8(), fixtures::c4()).group}) {
        auto T = oracle::cayley_from_pc(G);
        auto bs = oracle::brute_series(T);
        auto lc = lower_central(G);
        REQUIRE(lc.values().size() == bs.lower.size() + 1);
        for (size_t i = 0; i < bs.lower.size(); ++i) CHECK(oracle::as_set(T, G, lc.values()[i + 1]) == bs.lower[i]);
        auto uc = upper_central(G);
        REQUIRE(uc.values().size() == bs.upper.size());
        for (size_t i = 0; i < bs.upper.size(); ++i) CHECK(oracle::as_set(T, G, uc.values()[i]) == bs.upper[i]);
    }
}

TEST_CASE("boundaries")
{
    auto G = fixtures::d8();
    auto f = lower_central(G);
    CHECK(boundary_at(G, f, MonoidElem({1})) == subgroup_from_gens(G, {G.generator(2)}));
    auto l = upper_central(G);
    CHECK(boundary_at(G, l, MonoidElem({1})) == G.whole());
    CHECK(verify_filter(G, boundary(G, f)).empty());
    CHECK(verify_layering(G, boundary(G, l)).empty());

    auto dp = direct_product(fixtures::d8(), fixtures::d8());
    auto pf = product_filter(dp, {lower_central(fixtures::d8()), lower_central(fixtures::d8())});
    auto expect = join(dp.group, pf.at(MonoidElem({2, 1})), pf.at(MonoidElem({1, 2})));
    CHECK(boundary_at(dp.group, pf, MonoidElem({1, 1})) == expect);
    CHECK(subgroup_order(dp.group, pf.at(MonoidElem({2, 1}))) == 16);
}

TEST_CASE("axioms for the classical pairs")
{
    for (auto G : {fixtures::d8(), fixtures::q8(), fixtures::h27(), fixtures::c4(), fixtures::elementary(2, 3)}) {
        auto lc = lower_central(G), ep = exponent_p_lcs(G);
        auto uc = upper_central(G);
        CHECK(verify_filter(G, lc).empty());
        CHECK(verify_filter(G, ep).empty());
        CHECK(verify_layering(G, uc).empty());
        CHECK(verify_sift(G, lc, uc).empty());
        CHECK(verify_sift(G, ep, uc).empty());
        CHECK(verify_sift(G, lc, shift(uc)).empty());
        CHECK(verify_sift(G, lc, boundary(G, uc)).empty());
        CHECK(verify_sift(G, boundary(G, lc), uc).empty());
    }
}

TEST_CASE("trivial filter and fault injection")
{
    auto G = fixtures::d8();
    Filter triv(GradedMonoid(1, OrderKind::pointwise), MonoidElem({1}), {G.whole(), G.trivial()});
    CHECK(verify_filter(G, triv).empty());
    auto lc = lower_central(G);
    auto v = lc.values();
    std::swap(v[1], v[2]);
    Filter bad(lc.monoid(), lc.box(), v);
    auto rep = verify_filter(G, bad);
    REQUIRE_FALSE(rep.empty());
    CHECK(rep.front().find("witness") != std::string::npos);
}

TEST_CASE("product filters and layerings")
{
    auto dp = direct_product(fixtures::d8(), fixtures::elementary(2, 1));
    auto pf = product_filter(dp, {lower_central(dp.factors[0]), lower_central(dp.factors[1])});
    auto pl = product_layering(dp, {upper_central(dp.factors[0]), upper_central(dp.factors[1])});
    CHECK(verify_filter(dp.group, pf).empty());
    CHECK(verify_layering(dp.group, pl).empty());
    CHECK(verify_sift(dp.group, pf, pl).empty());
    auto G = fixtures::h27();
    auto single = product_filter(direct_product(std::vector<PcGroup>{G}), {lower_central(G)});
    CHECK(single.values() == lower_central(G).values());
}
