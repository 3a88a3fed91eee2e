#pragma once

// Filters and layerings stored on a finite box of N^d.
//
// Outside the box a value is read from the box: pointwise-ordered tables
// clamp coordinates to the box, lexicographic filters use the lex-least box
// point above (trivial if there is none) and lexicographic layerings the
// lex-greatest box point below. Constructors pick boxes past stabilization,
// so the rule reproduces the infinite map.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "filterlab/monoid.hpp"
#include "filterlab/pcgroup.hpp"

namespace filterlab {

class GradedTable {
public:
    GradedTable() = default;
    GradedTable(GradedMonoid monoid, MonoidElem box, std::vector<Subgroup> values);

    const GradedMonoid& monoid() const { return monoid_; }
    const MonoidElem& box() const { return box_; }
    /// Box points in lexicographic order; values() is parallel to this.
    const std::vector<MonoidElem>& grades() const { return grades_; }
    const std::vector<Subgroup>& values() const { return values_; }
    /// Position of an in-box grade in grades(), or -1.
    int index(const MonoidElem& s) const;

protected:
    int lex_successor(const MonoidElem& s) const;
    int lex_predecessor(const MonoidElem& s) const;

    GradedMonoid monoid_;
    MonoidElem box_;
    std::vector<MonoidElem> grades_;
    std::vector<Subgroup> values_;
};

class Filter : public GradedTable {
public:
    using GradedTable::GradedTable;
    /// phi_s for any s in N^d.
    Subgroup at(const MonoidElem& s) const;
};

class Layering : public GradedTable {
public:
    using GradedTable::GradedTable;
    /// pi^s for any s in N^d.
    Subgroup at(const MonoidElem& s) const;
};

/// Interns subgroups so repeated lattice operations are computed once.
class SubgroupCache {
public:
    explicit SubgroupCache(const PcGroup& G);

    const PcGroup& group() const { return G_; }
    int intern(const Subgroup& H);
    const Subgroup& get(int id) const { return pool_[id]; }

    int comm(int a, int b);
    int join(int a, int b);
    int meet(int a, int b);
    bool subset(int a, int b);

private:
    const PcGroup& G_;
    std::vector<Subgroup> pool_;
    std::map<Subgroup, int> ids_;
    std::map<std::pair<int, int>, int> comm_, join_, meet_;
    std::map<std::pair<int, int>, bool> subset_;
};

/// phi_0 = G, phi_i = gamma_i.
Filter lower_central(const PcGroup& G);
/// pi^0 = 1, pi^i = zeta^i.
Layering upper_central(const PcGroup& G);
/// eta_0 = eta_1 = G, eta_{i+1} = [G, eta_i] eta_i^p.
Filter exponent_p_lcs(const PcGroup& G);
/// Exponent-p upper central series: pi^0 = 1 and pi^{i+1} is generated by
/// the x with [x, G] <= pi^i and x^p in pi^i, so every stratum is
/// elementary abelian.
Layering upper_exponent_p(const PcGroup& G);
/// pi'^0 = pi^0 and pi'^s = pi^{s-1} otherwise (d = 1), so the strata of
/// upper_central become zeta^i / zeta^{i-1}.
Layering shift(const Layering& l);

Filter boundary(const PcGroup& G, const Filter& f);
Layering boundary(const PcGroup& G, const Layering& l);
/// The boundary at one grade.
Subgroup boundary_at(const PcGroup& G, const Filter& f, const MonoidElem& s);
Subgroup boundary_at(const PcGroup& G, const Layering& l, const MonoidElem& s);

std::vector<std::string> verify_filter(const PcGroup& G, const Filter& f);
std::vector<std::string> verify_layering(const PcGroup& G, const Layering& l);
std::vector<std::string> verify_sift(const PcGroup& G, const Filter& f, const Layering& l);

/// Orders |phi_s| along the box, for reports and tests.
std::vector<long long> orders(const PcGroup& G, const GradedTable& t);

Filter product_filter(const DirectProduct& dp, const std::vector<Filter>& parts, OrderKind kind = OrderKind::pointwise);
Layering product_layering(const DirectProduct& dp, const std::vector<Layering>& parts, OrderKind kind = OrderKind::pointwise);

}  // namespace filterlab
