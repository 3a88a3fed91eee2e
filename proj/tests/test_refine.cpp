#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "filterlab/autfilter.hpp"
#include "filterlab/refine.hpp"
#include "groups.hpp"

using namespace filterlab;

namespace {

PcGroup misc(const std::string& name) { return load_pcgroup(std::string(FILTERLAB_DATA_DIR) + "/corpus/misc/" + name + ".pcg"); }

int distinct_values(const Filter& f)
{
    std::vector<Subgroup> seen;
    for (const auto& v : f.values())
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    return static_cast<int>(seen.size());
}

// Every automorphism, by trying all generator images of matching order.
std::vector<AutMap> all_automorphisms(const PcGroup& G)
{
    const auto elems = G.elements();
    std::vector<std::vector<GroupElem>> choices(G.rank());
    for (int k = 0; k < G.rank(); ++k)
        for (const auto& x : elems)
            if (G.element_order(x) == G.element_order(G.generator(k))) choices[k].push_back(x);
    std::vector<AutMap> out;
    AutMap a{std::vector<GroupElem>(G.rank())};
    std::vector<size_t> idx(G.rank(), 0);
    while (true) {
        for (int k = 0; k < G.rank(); ++k) a.images[k] = choices[k][idx[k]];
        if (aut_failures(G, a).empty()) out.push_back(a);
        int k = G.rank() - 1;
        while (k >= 0 && ++idx[k] == choices[k].size()) idx[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

}  // namespace

TEST_CASE("lifting a subspace")
{
    auto G = misc("d8xc4");
    auto f = exponent_p_lcs(G);
    const MonoidElem s({1});
    auto L = graded_lie_ring(G, f);
    const int d = L.dim(s);
    REQUIRE(d >= 2);
    gf::Vec e(d, 0);
    e[0] = 1;
    auto H = lift_subspace(G, f, s, gf::Subspace::span({e}, d, 2));
    const auto bottom = boundary_at(G, f, s);
    CHECK(is_subset(G, bottom, H));
    CHECK(subgroup_order(G, H) == 2 * subgroup_order(G, bottom));
    CHECK(is_subset(G, H, f.at(s)));
    CHECK_THROWS_WITH_AS(lift_subspace(G, f, s, gf::Subspace::full(d, 2)), "nothing to insert", Error);
    CHECK_THROWS_AS(lift_subspace(G, f, s, gf::Subspace(d, 2)), Error);
}

TEST_CASE("inserting a subgroup")
{
    auto G = misc("d8xc4");
    auto f = exponent_p_lcs(G);
    const MonoidElem s({1});
    const int d = graded_lie_ring(G, f).dim(s);
    gf::Vec e(d, 0);
    e[d - 1] = 1;
    auto H = lift_subspace(G, f, s, gf::Subspace::span({e}, d, 2));
    if (!is_normal(G, H)) {
        e.assign(d, 0);
        e[0] = 1;
        H = lift_subspace(G, f, s, gf::Subspace::span({e}, d, 2));
    }
    REQUIRE(is_normal(G, H));
    auto g = insert_refinement(G, f, s, H);
    CHECK(g.monoid() == GradedMonoid(2, OrderKind::lexicographic));
    CHECK(verify_filter(G, g).empty());
    CHECK(distinct_values(g) == distinct_values(f) + 1);
    CHECK(g.at(MonoidElem({1, 1})) == H);
    for (const auto& m : f.grades()) CHECK(g.at(m.extended(0)) == f.at(m));
    CHECK_THROWS_WITH_AS(insert_refinement(G, f, s, f.at(s)), doctest::Contains("containment violated"), Error);
    CHECK_THROWS_AS(insert_refinement(G, f, s, boundary_at(G, f, s)), Error);
}

TEST_CASE("inserting into an elementary abelian group")
{
    auto G = fixtures::elementary(3, 3);
    auto f = exponent_p_lcs(G);
    auto H = subgroup_from_gens(G, {G.generator(1)});
    auto g = insert_refinement(G, f, MonoidElem({1}), H);
    CHECK(verify_filter(G, g).empty());
    CHECK(distinct_values(g) == 3);
    CHECK(orders(G, g) == std::vector<long long>{27, 27, 27, 3, 1, 1});
}

TEST_CASE("refinement of small groups")
{
    auto E = refine_to_fixpoint(fixtures::elementary(2, 4));
    CHECK(E.steps.empty());
    CHECK(E.classification == Classification::classical);
    // The commutator form of an extraspecial group is nondegenerate and
    // alternating, so nothing proper is emitted.
    for (auto G : {fixtures::d8(), fixtures::q8(), fixtures::h27()}) {
        auto r = refine_to_fixpoint(G);
        CHECK(r.steps.empty());
        CHECK(r.classification == Classification::classical);
    }
    auto r = refine_to_fixpoint(misc("d8xc4"));
    CHECK(!r.steps.empty());
    CHECK(verify_filter(misc("d8xc4"), r.final_filter).empty());
}

TEST_CASE("refinement is deterministic")
{
    auto G = misc("d8xc4");
    auto a = refine_to_fixpoint(G), b = refine_to_fixpoint(G);
    REQUIRE(a.steps.size() == b.steps.size());
    for (size_t i = 0; i < a.steps.size(); ++i) {
        CHECK(a.steps[i].subgroup == b.steps[i].subgroup);
        CHECK(a.steps[i].grade == b.steps[i].grade);
        CHECK(a.steps[i].ring == b.steps[i].ring);
    }
    CHECK(a.final_filter.values() == b.final_filter.values());
}

TEST_CASE("product structure is semi-classical")
{
    auto D = fixtures::d8(), Q = fixtures::q8(), H = fixtures::h27();
    for (const auto& dp : {direct_product(D, Q), direct_product(H, H)}) {
        auto r = refine_to_fixpoint(dp.group);
        REQUIRE(!r.steps.empty());
        CHECK(classify(r, &dp) == Classification::semi_classical);
        CHECK(classify(r) == Classification::non_semi_classical);
    }
}

TEST_CASE("order 16 refinements are characteristic")
{
    int flagged = 0;
    for (const auto& path : corpus_files("order16")) {
        INFO(path);
        auto G = load_pcgroup(path);
        auto r = refine_to_fixpoint(G);
        CHECK(verify_filter(G, r.final_filter).empty());
        if (r.steps.empty()) continue;
        ++flagged;
        CHECK(r.classification == Classification::non_semi_classical);
        const auto auts = all_automorphisms(G);
        REQUIRE(!auts.empty());
        for (const auto& step : r.steps)
            for (const auto& a : auts)
                for (const auto& x : step.subgroup.gens()) REQUIRE(membership(G, apply(G, a, x), step.subgroup));
    }
    CHECK(flagged == 8);
}

TEST_CASE("order 81 refinements are fixed by known automorphisms")
{
    int flagged = 0;
    for (const auto& path : corpus_files("order81")) {
        INFO(path);
        auto G = load_pcgroup(path);
        auto r = refine_to_fixpoint(G);
        CHECK(verify_filter(G, r.final_filter).empty());
        if (r.steps.empty()) continue;
        ++flagged;
        auto auts = central_automorphisms(G);
        for (int k = 0; k < G.rank(); ++k) auts.push_back(inner_aut(G, G.generator(k)));
        for (const auto& step : r.steps)
            for (const auto& a : auts)
                for (const auto& x : step.subgroup.gens()) CHECK(membership(G, apply(G, a, x), step.subgroup));
    }
    CHECK(flagged == 9);
}

TEST_CASE("sidecar automorphisms fix every inserted subgroup")
{
    for (const char* name : {"d8", "h27"}) {
        auto G = misc(name);
        auto auts = load_automorphisms(G, std::string(FILTERLAB_DATA_DIR) + "/corpus/misc/" + name + ".aut");
        auto r = refine_to_fixpoint(G);
        for (const auto& step : r.steps)
            for (const auto& a : auts)
                for (const auto& x : step.subgroup.gens()) CHECK(membership(G, apply(G, a, x), step.subgroup));
    }
}
