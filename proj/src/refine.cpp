#include "filterlab/refine.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace filterlab {

std::string to_string(Classification c)
{
    switch (c) {
    case Classification::classical: return "classical";
    case Classification::semi_classical: return "semi-classical";
    case Classification::non_semi_classical: return "non-semi-classical";
    }
    return "?";
}

Subgroup lift_subspace(const PcGroup& G, const Filter& f, const MonoidElem& s, const gf::Subspace& subspace)
{
    const Section sec(G, f.at(s), boundary_at(G, f, s));
    if (subspace.ambient() != sec.dim()) throw Error("subspace does not live in L_" + to_string(s));
    if (subspace.is_zero() || subspace.is_full()) throw Error("nothing to insert");
    std::vector<GroupElem> gens = sec.bottom().gens();
    for (const auto& v : subspace.vectors()) gens.push_back(sec.lift(G, v));
    return subgroup_from_gens(G, gens);
}

Filter insert_refinement(const PcGroup& G, const Filter& f, const MonoidElem& s, const Subgroup& H)
{
    const Subgroup top = f.at(s);
    const Subgroup bottom = boundary_at(G, f, s);
    if (!is_subset(G, bottom, H) || !is_subset(G, H, top) || H == bottom || H == top)
        throw Error("containment violated at " + to_string(s));
    if (!is_normal(G, H)) throw Error("inserted subgroup is not normal");

    const int d = f.monoid().dim() + 1;
    const GradedMonoid lex(d, OrderKind::lexicographic);
    SubgroupCache cache(G);
    const int trivial = cache.intern(G.trivial());

    // Generating values; only the lex-greatest grade of each old value matters.
    std::map<MonoidElem, int> gen;
    {
        std::map<int, MonoidElem> last;
        for (size_t i = 0; i < f.grades().size(); ++i) {
            const int id = cache.intern(f.values()[i]);
            if (id == trivial) continue;
            auto it = last.find(id);
            if (it == last.end() || lex.precedes(it->second, f.grades()[i].extended(0))) last[id] = f.grades()[i].extended(0);
        }
        for (const auto& [id, g] : last) gen[g] = id;
    }
    const MonoidElem sH = s.extended(1);
    gen[sH] = gen.count(sH) ? cache.join(gen[sH], cache.intern(H)) : cache.intern(H);

    auto value = [&](const MonoidElem& x) {
        int v = trivial;
        for (const auto& [g, id] : gen)
            if (lex.preceq(x, g)) v = cache.join(v, id);
        return v;
    };

    for (bool changed = true; changed;) {
        changed = false;
        std::vector<MonoidElem> keys;
        for (const auto& [g, id] : gen) keys.push_back(g);
        for (size_t i = 0; i < keys.size(); ++i)
            for (size_t j = i; j < keys.size(); ++j) {
                const int K = cache.comm(value(keys[i]), value(keys[j]));
                const MonoidElem target = keys[i] + keys[j];
                if (cache.subset(K, value(target))) continue;
                auto it = gen.find(target);
                gen[target] = it == gen.end() ? K : cache.join(it->second, K);
                changed = true;
            }
    }

    std::vector<int> bound = f.box().extended(0).coords();
    for (const auto& [g, id] : gen)
        for (int k = 0; k < d; ++k) bound[k] = std::max(bound[k], g[k]);
    const MonoidElem box(bound);
    std::vector<Subgroup> values;
    for (const auto& x : box_enumerate(box)) values.push_back(cache.get(value(x)));
    Filter out(lex, box, std::move(values));
    auto bad = verify_filter(G, out);
    if (!bad.empty()) throw Error("refined filter fails the filter axioms: " + bad.front());
    return out;
}

namespace {

int ring_rank(const std::string& label)
{
    static const std::vector<std::string> order{"Der", "Mid", "Left", "Right", "Cent", "Radical"};
    return static_cast<int>(std::find(order.begin(), order.end(), label) - order.begin());
}

struct Candidate {
    int rank;
    MonoidElem grade;
    gf::Subspace space;
    std::string ring, tag, side;
    MonoidElem s, t;

};

}  // namespace

RefinementReport refine_to_fixpoint(const PcGroup& G, const RefineOptions& opts)
{
    RefinementReport r;
    Filter f = exponent_p_lcs(G);
    bool first = true;
    while (true) {
        const GradedLieRing L = graded_lie_ring(G, f);
        if (first) {
            for (const auto& [g, c] : L.components()) r.seed_dims.push_back(c.dim());
            first = false;
        }
        StageReport stage;
        std::vector<Candidate> cands;
        for (const auto& [key, B] : L.brackets()) {
            const auto& [s, t] = key;
            if (t < s) continue;
            const ScalarAnalysis an = characteristic_subspaces(B);
            stage.rings.push_back({s, t, an.dims.der, an.dims.left, an.dims.mid, an.dims.right, an.dims.cent});
            for (const auto& src : an.sources)
                if (std::find(stage.sources.begin(), stage.sources.end(), src) == stage.sources.end()) stage.sources.push_back(src);
            for (const auto& e : an.emissions) {
                const MonoidElem grade = e.side == Side::U ? s : e.side == Side::V ? t : s + t;
                cands.push_back({ring_rank(source_label(e)), grade, e.space, source_label(e), e.tag, to_string(e.side), s, t});
            }
        }
        r.stages.push_back(std::move(stage));
        if (cands.empty()) break;
        if (static_cast<int>(r.steps.size()) >= opts.max_insertions) {
            r.cap_hit = true;
            break;
        }
        const Candidate& c = *std::min_element(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            if (a.rank != b.rank) return a.rank < b.rank;
            if (a.grade != b.grade) return a.grade < b.grade;
            if (a.space.dim() != b.space.dim()) return a.space.dim() < b.space.dim();
            return a.space < b.space;
        });
        const Subgroup H = lift_subspace(G, f, c.grade, c.space);
        RefinementStep step;
        step.grade = c.grade;
        step.ring = c.ring;
        step.tag = c.tag;
        step.side = c.side;
        step.s = c.s;
        step.t = c.t;
        step.new_index = subgroup_order(G, f.at(c.grade)) / subgroup_order(G, H);
        step.subgroup = H;
        f = insert_refinement(G, f, c.grade, H);
        r.steps.push_back(std::move(step));
    }
    r.final_filter = std::move(f);
    r.classification = classify(r);
    return r;
}

Classification classify(const RefinementReport& r, const DirectProduct* dp)
{
    if (r.steps.empty()) return Classification::classical;
    if (!dp) return Classification::non_semi_classical;
    const PcGroup& G = dp->group;
    std::vector<Filter> seeds;
    for (const auto& F : dp->factors) seeds.push_back(exponent_p_lcs(F));
    std::vector<Subgroup> values;
    const Filter product = product_filter(*dp, seeds);
    for (const auto& v : product.values())
        if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    // Joins of product values are also product structure.
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            Subgroup J = join(G, values[i], values[j]);
            if (std::find(values.begin(), values.end(), J) == values.end()) values.push_back(J);
        }
    for (const auto& step : r.steps)
        if (std::find(values.begin(), values.end(), step.subgroup) == values.end()) return Classification::non_semi_classical;
    return Classification::semi_classical;
}

std::vector<std::string> flagging_sources(const RefinementReport& r)
{
    std::vector<std::string> out;
    for (const auto& st : r.stages)
        for (const auto& s : st.sources)
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) { return ring_rank(a) < ring_rank(b); });
    return out;
}

}  // namespace filterlab
