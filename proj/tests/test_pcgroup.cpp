#include "doctest.h"
#include "groups.hpp"

using namespace filterlab;
using fixtures::d8;
using fixtures::h27;

static GroupElem e(std::vector<int> v) { return GroupElem(std::move(v)); }

TEST_CASE("parsing")
{
    auto G = d8();
    CHECK(G.order() == 8);
    CHECK(fixtures::elementary(3, 2).order() == 9);
    CHECK_THROWS_AS(parse_pcgroup("p 2\nn 2\ncomm 1 2 = g2\n"), ParseError);
    CHECK_THROWS_AS(parse_pcgroup("p 4\nn 2\n"), ParseError);
    CHECK_THROWS_AS(parse_pcgroup("p 2\nn 3\npow 2 = g1\n"), ParseError);
    CHECK_THROWS_AS(parse_pcgroup("p 2\nn 2\nbogus\n"), ParseError);
    try {
        parse_pcgroup("p 2\nn 2\n# comment\nfoo = g1\n");
    } catch (const ParseError& err) {
        CHECK(err.line() == 4);
    }
    CHECK_THROWS_AS(parse_pcgroup("p 2\nn 3\npow 1 = g3\ncomm 2 1 = g3\ncomm 3 1 = g3\n"), Error);
}

TEST_CASE("round trip through the text format")
{
    auto G = fixtures::q8();
    auto H = parse_pcgroup(format_pcgroup(G));
    CHECK(format_pcgroup(H) == format_pcgroup(G));
}

TEST_CASE("collection in D8")
{
    auto G = d8();
    CHECK(G.collect({{0, 1}, {1, 1}, {0, 1}}) == e({0, 1, 1}));
    CHECK(G.collect({}) == G.identity());
    CHECK(fixtures::elementary(3, 2).collect({{0, 4}}) == e({1, 0}));
    CHECK(G.multiply(e({0, 1, 0}), e({0, 1, 0})) == e({0, 0, 1}));
    CHECK(G.commutator(G.generator(1), G.generator(0)) == G.generator(2));
    for (const auto& x : G.elements()) {
        CHECK(G.multiply(x, G.inverse(x)) == G.identity());
        CHECK(G.commutator(x, x) == G.identity());
    }
    CHECK(G.collect({{0, -1}}) == G.generator(0));
}

TEST_CASE("Heisenberg group of order 27")
{
    auto G = h27();
    CHECK(G.commutator(G.power(G.generator(1), 2), G.generator(0)) == e({0, 0, 2}));
    CHECK(G.element_order(G.generator(0)) == 3);
}

TEST_CASE("subgroups of D8")
{
    auto G = d8();
    auto Z = subgroup_from_gens(G, {G.generator(2)});
    CHECK(subgroup_order(G, Z) == 2);
    CHECK(subgroup_order(G, G.trivial()) == 1);
    auto W = subgroup_from_gens(G, {G.generator(0), G.generator(1)});
    CHECK(subgroup_order(G, W) == 8);
    CHECK(subgroup_from_gens(G, W.gens()) == W);
    CHECK(membership(G, G.generator(2), Z));
    CHECK_FALSE(membership(G, G.generator(0), Z));
    CHECK(join(G, Z, G.trivial()) == Z);
    CHECK(comm_subgroup(G, W, W) == Z);
    CHECK(comm_subgroup(G, W, G.trivial()).is_trivial());
    CHECK(centralizer_mod(G, W, G.trivial()) == Z);
    CHECK(centralizer_mod(G, W, W) == W);
    auto A = subgroup_from_gens(G, {G.generator(0)});
    CHECK_FALSE(is_normal(G, A));
    CHECK(subgroup_order(G, normal_closure(G, A)) == 4);
    auto B = subgroup_from_gens(G, {G.generator(1)});
    CHECK(intersect(G, normal_closure(G, A), B) == Z);
    CHECK(subgroup_elements(G, B).size() == 4);
}

TEST_CASE("abelian groups have trivial derived subgroup")
{
    auto G = fixtures::elementary(3, 3);
    CHECK(comm_subgroup(G, G.whole(), G.whole()).is_trivial());
    CHECK(centralizer_mod(G, G.whole(), G.trivial()) == G.whole());
}

TEST_CASE("direct products")
{
    auto dp = direct_product(d8(), fixtures::elementary(2, 1));
    CHECK(dp.group.order() == 16);
    CHECK(dp.group.rank() == 4);
    auto hh = direct_product(h27(), h27());
    CHECK(hh.group.order() == 729);
    auto Z = centralizer_mod(hh.group, hh.group.whole(), hh.group.trivial());
    CHECK(subgroup_order(hh.group, Z) == 9);
    CHECK_THROWS(direct_product(d8(), h27()));
    auto emb = dp.embed(0, d8().generator(1));
    CHECK(emb == GroupElem({0, 1, 0, 0}));
}
