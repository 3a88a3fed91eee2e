#include "doctest.h"
#include "filterlab/oracle.hpp"
#include "groups.hpp"

using namespace filterlab;
using namespace filterlab::oracle;

static std::vector<size_t> orders(const std::vector<ElementSet>& s)
{
    std::vector<size_t> out;
    for (const auto& x : s) out.push_back(x.size());
    return out;
}

TEST_CASE("Cayley tables of small groups")
{
    auto T = cayley_from_pc(fixtures::d8());
    CHECK(T.order == 8);
    int r = static_cast<int>(fixtures::d8().index_of(GroupElem({0, 1, 0})));
    int r3 = static_cast<int>(fixtures::d8().index_of(GroupElem({0, 1, 1})));
    CHECK(T.mul(r, r) == T.mul(r3, r3));
    CHECK(cayley_from_pc(fixtures::elementary(3, 1)).order == 3);
    CHECK(cayley_from_pc(fixtures::elementary(2, 0)).order == 1);
}

TEST_CASE("brute-force central series")
{
    auto s = brute_series(cayley_from_pc(fixtures::d8()));
    CHECK(orders(s.lower) == std::vector<size_t>{8, 2, 1});
    CHECK(orders(s.upper) == std::vector<size_t>{1, 2, 8});
    auto h = brute_series(cayley_from_pc(fixtures::h27()));
    CHECK(orders(h.lower) == std::vector<size_t>{27, 3, 1});
    CHECK(orders(h.upper) == std::vector<size_t>{1, 3, 27});
    auto a = brute_series(cayley_from_pc(fixtures::elementary(2, 3)));
    CHECK(orders(a.lower) == std::vector<size_t>{8, 1});
    CHECK(orders(a.upper) == std::vector<size_t>{1, 8});
}

TEST_CASE("collector agrees with the oracle")
{
    for (auto G : {fixtures::d8(), fixtures::q8(), fixtures::h27(), fixtures::c4()}) {
        auto T = cayley_from_pc(G);
        CHECK(check_equiv(G, T).empty());
    }
}

TEST_CASE("subgroup operations agree with brute force on D8 x C4")
{
    auto G = direct_product(fixtures::d8(), fixtures::c4()).group;
    auto T = cayley_from_pc(G);
    auto els = G.elements();
    for (size_t a = 1; a < els.size(); a += 5)
        for (size_t b = 2; b < els.size(); b += 7) {
            auto H = subgroup_from_gens(G, {els[a]});
            auto K = subgroup_from_gens(G, {els[b], els[(a + b) % els.size()]});
            int ia = static_cast<int>(a), ib = static_cast<int>(b), ic = static_cast<int>((a + b) % els.size());
            CHECK(as_set(T, G, H) == generate(T, {ia}));
            CHECK(as_set(T, G, K) == generate(T, {ib, ic}));
            CHECK(as_set(T, G, comm_subgroup(G, H, K)) == commutator_set(T, as_set(T, G, H), as_set(T, G, K)));
            CHECK(comm_subgroup(G, H, K) == comm_subgroup(G, K, H));
            ElementSet both;
            auto hs = as_set(T, G, H), ks = as_set(T, G, K);
            std::set_intersection(hs.begin(), hs.end(), ks.begin(), ks.end(), std::back_inserter(both));
            CHECK(as_set(T, G, intersect(G, H, K)) == both);
        }
}

TEST_CASE("a corrupted relation is caught")
{
    // g2 = g1^2 cannot fail to commute with g1.
    auto bad = parse_pcgroup("p 2\nn 3\npow 1 = g2\npow 2 = g3\ncomm 2 1 = g3\n", false);
    auto T = cayley_from_pc(bad);
    auto rep = check_equiv(bad, T);
    REQUIRE_FALSE(rep.empty());
    CHECK(rep.front().find("product") != std::string::npos);
}
