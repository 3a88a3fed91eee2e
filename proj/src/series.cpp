#include "filterlab/series.hpp"

#include <algorithm>

namespace filterlab {

GradedTable::GradedTable(GradedMonoid monoid, MonoidElem box, std::vector<Subgroup> values)
    : monoid_(monoid), box_(std::move(box)), grades_(box_enumerate(box_)), values_(std::move(values))
{
    if (box_.dim() != monoid_.dim()) throw Error("graded table: box dimension does not match the monoid");
    if (values_.size() != grades_.size()) throw Error("graded table: value count does not match the box");
}

int GradedTable::index(const MonoidElem& s) const
{
    if (s.dim() != box_.dim()) throw Error("graded table: grade dimension mismatch");
    int idx = 0;
    for (int i = 0; i < s.dim(); ++i) {
        if (s[i] > box_[i]) return -1;
        idx = idx * (box_[i] + 1) + s[i];
    }
    return idx;
}

int GradedTable::lex_successor(const MonoidElem& s) const
{
    auto it = std::lower_bound(grades_.begin(), grades_.end(), s);
    return it == grades_.end() ? -1 : static_cast<int>(it - grades_.begin());
}

int GradedTable::lex_predecessor(const MonoidElem& s) const
{
    auto it = std::upper_bound(grades_.begin(), grades_.end(), s);
    return static_cast<int>(it - grades_.begin()) - 1;
}

Subgroup Filter::at(const MonoidElem& s) const
{
    int i = index(s);
    if (i >= 0) return values_[i];
    if (monoid_.kind() == OrderKind::pointwise) return values_[index(clamp(s, box_))];
    i = lex_successor(s);
    return i < 0 ? Subgroup() : values_[i];
}

Subgroup Layering::at(const MonoidElem& s) const
{
    int i = index(s);
    if (i >= 0) return values_[i];
    if (monoid_.kind() == OrderKind::pointwise) return values_[index(clamp(s, box_))];
    return values_[lex_predecessor(s)];
}

// ---------------------------------------------------------------------------

SubgroupCache::SubgroupCache(const PcGroup& G) : G_(G) {}

int SubgroupCache::intern(const Subgroup& H)
{
    auto [it, fresh] = ids_.try_emplace(H, static_cast<int>(pool_.size()));
    if (fresh) pool_.push_back(H);
    return it->second;
}

int SubgroupCache::comm(int a, int b)
{
    auto key = std::minmax(a, b);
    auto it = comm_.find(key);
    if (it != comm_.end()) return it->second;
    int r = intern(comm_subgroup(G_, pool_[a], pool_[b]));
    comm_[key] = r;
    return r;
}

int SubgroupCache::join(int a, int b)
{
    auto key = std::minmax(a, b);
    auto it = join_.find(key);
    if (it != join_.end()) return it->second;
    int r = intern(filterlab::join(G_, pool_[a], pool_[b]));
    join_[key] = r;
    return r;
}

int SubgroupCache::meet(int a, int b)
{
    auto key = std::minmax(a, b);
    auto it = meet_.find(key);
    if (it != meet_.end()) return it->second;
    int r = intern(intersect(G_, pool_[a], pool_[b]));
    meet_[key] = r;
    return r;
}

bool SubgroupCache::subset(int a, int b)
{
    auto key = std::make_pair(a, b);
    auto it = subset_.find(key);
    if (it != subset_.end()) return it->second;
    bool r = is_subset(G_, pool_[a], pool_[b]);
    subset_[key] = r;
    return r;
}

// ---------------------------------------------------------------------------

static Filter chain_filter(std::vector<Subgroup> terms)
{
    const int top = static_cast<int>(terms.size()) - 1;
    return Filter(GradedMonoid(1, OrderKind::pointwise), MonoidElem({top}), std::move(terms));
}

Filter lower_central(const PcGroup& G)
{
    std::vector<Subgroup> terms{G.whole(), G.whole()};
    while (!terms.back().is_trivial()) terms.push_back(comm_subgroup(G, G.whole(), terms.back()));
    return chain_filter(std::move(terms));
}

Filter exponent_p_lcs(const PcGroup& G)
{
    std::vector<Subgroup> terms{G.whole(), G.whole()};
    while (!terms.back().is_trivial()) {
        const Subgroup& e = terms.back();
        terms.push_back(join(G, comm_subgroup(G, G.whole(), e), power_subgroup(G, e)));
    }
    return chain_filter(std::move(terms));
}

Layering upper_central(const PcGroup& G)
{
    std::vector<Subgroup> terms{G.trivial()};
    while (terms.back() != G.whole()) terms.push_back(centralizer_mod(G, G.whole(), terms.back()));
    const int top = static_cast<int>(terms.size()) - 1;
    return Layering(GradedMonoid(1, OrderKind::pointwise), MonoidElem({top}), std::move(terms));
}

Layering upper_exponent_p(const PcGroup& G)
{
    std::vector<Subgroup> terms{G.trivial()};
    while (terms.back() != G.whole()) {
        const Subgroup& below = terms.back();
        std::vector<GroupElem> gens;
        for (const auto& x : subgroup_elements(G, centralizer_mod(G, G.whole(), below)))
            if (membership(G, G.power(x, G.prime()), below)) gens.push_back(x);
        terms.push_back(subgroup_from_gens(G, gens));
    }
    const int top = static_cast<int>(terms.size()) - 1;
    return Layering(GradedMonoid(1, OrderKind::pointwise), MonoidElem({top}), std::move(terms));
}

Layering shift(const Layering& l)
{
    if (l.monoid().dim() != 1) throw Error("shift: layering must be graded by N");
    std::vector<Subgroup> terms{l.values().front()};
    for (const auto& v : l.values()) terms.push_back(v);
    return Layering(l.monoid(), MonoidElem({l.box()[0] + 1}), std::move(terms));
}

Subgroup boundary_at(const PcGroup& G, const Filter& f, const MonoidElem& s)
{
    Subgroup r;
    for (int i = 0; i < s.dim(); ++i) r = join(G, r, f.at(s + MonoidElem::unit(s.dim(), i)));
    return r;
}

Subgroup boundary_at(const PcGroup& G, const Layering& l, const MonoidElem& s)
{
    Subgroup r = G.whole();
    for (int i = 0; i < s.dim(); ++i) r = intersect(G, r, l.at(s + MonoidElem::unit(s.dim(), i)));
    return r;
}

Filter boundary(const PcGroup& G, const Filter& f)
{
    std::vector<Subgroup> v;
    for (const auto& s : f.grades()) v.push_back(boundary_at(G, f, s));
    return Filter(f.monoid(), f.box(), std::move(v));
}

Layering boundary(const PcGroup& G, const Layering& l)
{
    std::vector<Subgroup> v;
    for (const auto& s : l.grades()) v.push_back(boundary_at(G, l, s));
    return Layering(l.monoid(), l.box(), std::move(v));
}

// ---------------------------------------------------------------------------

namespace {

std::string describe_commutator_failure(const PcGroup& G, const Subgroup& A, const Subgroup& B, const Subgroup& T)
{
    for (const auto& x : A.gens())
        for (const auto& y : B.gens()) {
            auto c = G.commutator(x, y);
            if (!membership(G, c, T)) return "[" + to_string(x) + "," + to_string(y) + "] = " + to_string(c);
        }
    const Subgroup C = comm_subgroup(G, A, B);
    for (const auto& c : C.gens())
        if (!membership(G, c, T)) return "commutator subgroup element " + to_string(c);
    return "?";
}

void check_monotone(const GradedTable& t, SubgroupCache& cache, const std::vector<int>& ids, bool descending,
                    std::vector<std::string>& out)
{
    const auto& g = t.grades();
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) {
            if (!t.monoid().precedes(g[i], g[j])) continue;
            bool ok = descending ? cache.subset(ids[j], ids[i]) : cache.subset(ids[i], ids[j]);
            if (!ok)
                out.push_back("order: " + to_string(g[i]) + " < " + to_string(g[j]) + " but the values are not " +
                              (descending ? "descending" : "ascending"));
        }
}

}  // namespace

std::vector<std::string> verify_filter(const PcGroup& G, const Filter& f)
{
    std::vector<std::string> out;
    SubgroupCache cache(G);
    std::vector<int> ids;
    for (const auto& v : f.values()) ids.push_back(cache.intern(v));
    const auto& g = f.grades();
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i; j < g.size(); ++j) {
            int target = cache.intern(f.at(g[i] + g[j]));
            if (!cache.subset(cache.comm(ids[i], ids[j]), target))
                out.push_back("commutator: s=" + to_string(g[i]) + " t=" + to_string(g[j]) + " witness " +
                              describe_commutator_failure(G, f.values()[i], f.values()[j], cache.get(target)));
        }
    check_monotone(f, cache, ids, true, out);
    return out;
}

std::vector<std::string> verify_layering(const PcGroup& G, const Layering& l)
{
    std::vector<std::string> out;
    SubgroupCache cache(G);
    std::vector<int> ids, bnd;
    for (const auto& v : l.values()) ids.push_back(cache.intern(v));
    for (const auto& s : l.grades()) bnd.push_back(cache.intern(boundary_at(G, l, s)));
    const auto& g = l.grades();
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            if (!cache.subset(cache.comm(ids[i], bnd[j]), ids[j]))
                out.push_back("commutator: s=" + to_string(g[i]) + " t=" + to_string(g[j]) + " witness " +
                              describe_commutator_failure(G, l.values()[i], cache.get(bnd[j]), l.values()[j]));
    check_monotone(l, cache, ids, false, out);
    return out;
}

std::vector<std::string> verify_sift(const PcGroup& G, const Filter& f, const Layering& l)
{
    if (f.monoid() != l.monoid()) throw Error("verify_sift: filter and layering use different monoids");
    std::vector<std::string> out;
    SubgroupCache cache(G);
    // Grades of both boxes; values outside either box follow the outside rules.
    MonoidElem bound = f.box();
    {
        std::vector<int> c(bound.dim());
        for (int i = 0; i < bound.dim(); ++i) c[i] = std::max(f.box()[i], l.box()[i]);
        bound = MonoidElem(c);
    }
    auto grades = box_enumerate(bound);
    for (const auto& s : grades) {
        int fs = cache.intern(f.at(s));
        for (const auto& t : grades) {
            int lst = cache.intern(l.at(s + t));
            int lt = cache.intern(l.at(t));
            if (!cache.subset(cache.comm(fs, lst), lt))
                out.push_back("sift: s=" + to_string(s) + " t=" + to_string(t) + " witness " +
                              describe_commutator_failure(G, cache.get(fs), cache.get(lst), cache.get(lt)));
        }
    }
    return out;
}

std::vector<long long> orders(const PcGroup& G, const GradedTable& t)
{
    std::vector<long long> out;
    for (const auto& v : t.values()) out.push_back(subgroup_order(G, v));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class Part>
std::pair<GradedMonoid, MonoidElem> product_shape(const DirectProduct& dp, const std::vector<Part>& parts, OrderKind kind)
{
    if (parts.size() != dp.factors.size()) throw Error("product: one part per factor is required");
    std::vector<int> box;
    for (const auto& part : parts)
        for (int c : part.box().coords()) box.push_back(c);
    return {GradedMonoid(static_cast<int>(box.size()), kind), MonoidElem(box)};
}

template <class Part>
std::vector<Subgroup> product_values(const DirectProduct& dp, const std::vector<Part>& parts, const MonoidElem& box)
{
    std::vector<Subgroup> values;
    for (const auto& m : box_enumerate(box)) {
        Subgroup v;
        int off = 0;
        for (size_t k = 0; k < parts.size(); ++k) {
            const int d = parts[k].monoid().dim();
            std::vector<int> slice(m.coords().begin() + off, m.coords().begin() + off + d);
            off += d;
            v = join(dp.group, v, dp.embed(static_cast<int>(k), parts[k].at(MonoidElem(slice))));
        }
        values.push_back(v);
    }
    return values;
}

}  // namespace

Filter product_filter(const DirectProduct& dp, const std::vector<Filter>& parts, OrderKind kind)
{
    auto [M, box] = product_shape(dp, parts, kind);
    return Filter(M, box, product_values(dp, parts, box));
}

Layering product_layering(const DirectProduct& dp, const std::vector<Layering>& parts, OrderKind kind)
{
    auto [M, box] = product_shape(dp, parts, kind);
    return Layering(M, box, product_values(dp, parts, box));
}

}  // namespace filterlab
