#pragma once

// Refining a filter by lifting characteristic subspaces of its graded Lie
// ring back to subgroups, one insertion at a time.

#include <optional>
#include <string>
#include <vector>

#include "filterlab/lie.hpp"
#include "filterlab/scalars.hpp"

namespace filterlab {

/// H = <boundary at s, lifts of the subspace basis>. Throws Error when the
/// subspace is zero or all of L_s ("nothing to insert").
Subgroup lift_subspace(const PcGroup& G, const Filter& f, const MonoidElem& s, const gf::Subspace& subspace);

/// The filter on N^{d+1} (lexicographic) generated by (m, 0) -> phi_m and
/// (s, 1) -> H, closed under commutators. Throws Error unless
/// boundary_s < H < phi_s with H normal, or if the result fails
/// verify_filter.
Filter insert_refinement(const PcGroup& G, const Filter& f, const MonoidElem& s, const Subgroup& H);

enum class Classification { classical, semi_classical, non_semi_classical };
std::string to_string(Classification c);

struct PairDims {
    MonoidElem s, t;
    int der = 0, left = 0, mid = 0, right = 0, cent = 0;
};

struct StageReport {
    std::vector<PairDims> rings;
    /// Sources with a proper invariant subspace at this stage.
    std::vector<std::string> sources;
};

struct RefinementStep {
    MonoidElem grade;      // in the monoid of the filter being refined
    std::string ring;      // emitting ring
    std::string tag;       // how the ring produced it
    std::string side;      // U, V or W of the emitting product
    MonoidElem s, t;       // the product L_s x L_t -> L_{s+t}
    long long new_index = 0;  // |phi_grade : H|
    Subgroup subgroup;
};

struct RefinementReport {
    std::vector<int> seed_dims;  // dimensions of the seed Lie ring, by grade
    std::vector<StageReport> stages;
    std::vector<RefinementStep> steps;
    Filter final_filter;
    bool cap_hit = false;
    Classification classification = Classification::classical;
};

struct RefineOptions {
    int max_insertions = 20;
};

/// Seeds with exponent_p_lcs(G) and inserts the first emission (in the
/// documented order) until none remains or the cap is reached.
RefinementReport refine_to_fixpoint(const PcGroup& G, const RefineOptions& opts = {});

/// Classical without steps; semi-classical when every inserted subgroup is
/// a value of the product of the factors' seed filters (only when the group
/// was built by direct_product); non-semi-classical otherwise.
Classification classify(const RefinementReport& r, const DirectProduct* dp = nullptr);

/// Sources whose emissions, at any stage, would have refined the filter.
std::vector<std::string> flagging_sources(const RefinementReport& r);

}  // namespace filterlab
