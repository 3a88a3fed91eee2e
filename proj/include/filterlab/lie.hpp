#pragma once

// Graded Lie rings of filters and graded Lie modules of layerings, in matrix
// mode (elementary abelian factors, coefficients GF(p)) and integral mode
// (raw coset arithmetic).

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "filterlab/bimap.hpp"
#include "filterlab/series.hpp"

namespace filterlab {

/// An elementary abelian section top/bottom with a fixed basis of coset
/// representatives taken from the canonical sequence of `top`.
class Section {
public:
    Section() = default;
    /// Throws Error if bottom is not below top or the quotient is not
    /// elementary abelian.
    Section(const PcGroup& G, Subgroup top, Subgroup bottom);

    int dim() const { return static_cast<int>(reps_.size()); }
    const Subgroup& top() const { return top_; }
    const Subgroup& bottom() const { return bottom_; }
    const std::vector<GroupElem>& reps() const { return reps_; }

    /// Coordinates of x (which must lie in top) modulo bottom.
    gf::Vec coords(const PcGroup& G, const GroupElem& x) const;
    /// A representative of the coset with coordinates v.
    GroupElem lift(const PcGroup& G, const gf::Vec& v) const;

private:
    Subgroup top_, bottom_;
    std::vector<GroupElem> reps_;
    std::vector<int> rep_depths_;
    // Canonical sequence of top split into rep slots and bottom slots.
    std::vector<GroupElem> seq_;
    std::vector<int> seq_rep_index_;  // -1 for bottom slots
};

struct HomComponent {
    MonoidElem grade;
    Section section;
    int dim() const { return section.dim(); }
};

class GradedLieRing {
public:
    int prime() const { return p_; }
    const GradedMonoid& monoid() const { return monoid_; }
    /// Nonzero components, ordered by grade.
    const std::map<MonoidElem, HomComponent>& components() const { return comps_; }
    int dim(const MonoidElem& s) const;
    /// Structure constants of L_s x L_t -> L_{s+t}; absent when either side
    /// or the target is zero.
    const std::map<std::pair<MonoidElem, MonoidElem>, Bimap>& brackets() const { return brackets_; }
    std::map<std::pair<MonoidElem, MonoidElem>, Bimap>& brackets_mut() { return brackets_; }
    const Bimap* bracket(const MonoidElem& s, const MonoidElem& t) const;

private:
    friend GradedLieRing graded_lie_ring(const PcGroup&, const Filter&);
    int p_ = 2;
    GradedMonoid monoid_;
    std::map<MonoidElem, HomComponent> comps_;
    std::map<std::pair<MonoidElem, MonoidElem>, Bimap> brackets_;
};

class GradedModule {
public:
    int prime() const { return p_; }
    /// Strata L^s(pi) for nonzero grades (the module is their duals).
    const std::map<MonoidElem, HomComponent>& strata() const { return strata_; }
    int dim(const MonoidElem& s) const;
    /// Mixed products L_s x L^{s+t} -> L^t keyed by (s, t).
    const std::map<std::pair<MonoidElem, MonoidElem>, Bimap>& mixed() const { return mixed_; }
    /// Actions L_s x L^t(Q) -> L^{s+t}(Q) keyed by (s, t).
    const std::map<std::pair<MonoidElem, MonoidElem>, Bimap>& actions() const { return actions_; }
    std::map<std::pair<MonoidElem, MonoidElem>, Bimap>& actions_mut() { return actions_; }
    const Bimap* action(const MonoidElem& s, const MonoidElem& t) const;

private:
    friend GradedModule graded_module(const PcGroup&, const Filter&, const Layering&, const GradedLieRing&);
    int p_ = 2;
    std::map<MonoidElem, HomComponent> strata_;
    std::map<std::pair<MonoidElem, MonoidElem>, Bimap> mixed_;
    std::map<std::pair<MonoidElem, MonoidElem>, Bimap> actions_;
};

GradedLieRing graded_lie_ring(const PcGroup& G, const Filter& f);
/// Requires verify_sift(f, l) to be empty.
GradedModule graded_module(const PcGroup& G, const Filter& f, const Layering& l, const GradedLieRing& L);

std::vector<std::string> check_jacobi(const GradedLieRing& L);
std::vector<std::string> check_alternating(const GradedLieRing& L);
std::vector<std::string> check_module_law(const GradedLieRing& L, const GradedModule& M);

/// Coset-level check without any elementary abelian assumption: for
/// random x in phi_s, y in phi_t, z in the boundary at s+t+u, verifies
/// [[x,y],z] = [x,[y,z]] [y,[x,z]]^-1 modulo pi^u, and biadditivity of the
/// mixed product. N-graded filters and layerings only.
std::vector<std::string> check_integral_module(const PcGroup& G, const Filter& f, const Layering& l, int trials,
                                               unsigned seed);

/// A uniformly random element of H.
GroupElem random_element(const PcGroup& G, const Subgroup& H, std::mt19937& rng);

/// hom(A, Q/Z) for a finite abelian section A = top/bottom.
struct AbelianDual {
    std::vector<long long> invariants;  // cyclic factor orders, ascending, all > 1
    long long order() const;
    /// Coordinates of x in the invariant-factor basis.
    std::vector<long long> coords(const PcGroup& G, const GroupElem& x) const;
    /// <x, f> in Q/Z as a reduced fraction num/den with 0 <= num < den.
    std::pair<long long, long long> pairing(const std::vector<long long>& x, const std::vector<long long>& f) const;

    // internals for coords()
    Subgroup top, bottom;
    std::vector<GroupElem> reps;
    std::vector<std::vector<long long>> transform;  // k x r
    std::vector<GroupElem> seq;
    std::vector<int> seq_rep_index;
};

AbelianDual dual_abelian(const PcGroup& G, const Subgroup& top, const Subgroup& bottom);

}  // namespace filterlab
