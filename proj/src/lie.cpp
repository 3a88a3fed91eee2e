#include "filterlab/lie.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace filterlab {

namespace {

// Sifts x through an induced sequence (one element per depth, leading
// exponent 1) and returns the exponent recorded at each slot.
std::vector<int> sift_exponents(const PcGroup& G, const std::vector<GroupElem>& seq, GroupElem x)
{
    const int p = G.prime();
    std::vector<int> e(seq.size(), 0);
    for (size_t i = 0; i < seq.size(); ++i) {
        int d = seq[i].depth();
        int c = x[d];
        if (c == 0) continue;
        e[i] = c;
        x = G.multiply(G.power(seq[i], p - c), x);
    }
    if (!x.is_identity()) throw Error("element does not lie in the section's top group");
    return e;
}

void build_sequence(const Subgroup& top, const Subgroup& bottom, std::vector<GroupElem>& seq, std::vector<int>& rep_index,
                    std::vector<GroupElem>& reps)
{
    std::map<int, GroupElem> low;
    for (const auto& b : bottom.gens()) low.emplace(b.depth(), b);
    for (const auto& t : top.gens()) {
        auto it = low.find(t.depth());
        if (it != low.end()) {
            seq.push_back(it->second);
            rep_index.push_back(-1);
        } else {
            rep_index.push_back(static_cast<int>(reps.size()));
            seq.push_back(t);
            reps.push_back(t);
        }
    }
}

}  // namespace

Section::Section(const PcGroup& G, Subgroup top, Subgroup bottom) : top_(std::move(top)), bottom_(std::move(bottom))
{
    if (!is_subset(G, bottom_, top_)) throw Error("section: bottom is not contained in top");
    build_sequence(top_, bottom_, seq_, seq_rep_index_, reps_);
    for (const auto& r : reps_) rep_depths_.push_back(r.depth());
    for (const auto& b : bottom_.gens())
        for (const auto& r : reps_)
            if (!membership(G, G.conjugate(b, r), bottom_)) throw Error("section: bottom is not normal in top");
    for (size_t i = 0; i < reps_.size(); ++i) {
        if (!membership(G, G.power(reps_[i], G.prime()), bottom_)) throw Error("section: quotient is not elementary abelian");
        for (size_t j = i + 1; j < reps_.size(); ++j)
            if (!membership(G, G.commutator(reps_[i], reps_[j]), bottom_))
                throw Error("section: quotient is not elementary abelian");
    }
}

gf::Vec Section::coords(const PcGroup& G, const GroupElem& x) const
{
    auto e = sift_exponents(G, seq_, x);
    gf::Vec v(reps_.size(), 0);
    for (size_t i = 0; i < seq_.size(); ++i)
        if (seq_rep_index_[i] >= 0) v[seq_rep_index_[i]] = e[i];
    return v;
}

GroupElem Section::lift(const PcGroup& G, const gf::Vec& v) const
{
    GroupElem x = G.identity();
    for (size_t i = 0; i < reps_.size(); ++i) x = G.multiply(x, G.power(reps_[i], gf::mod(v[i], G.prime())));
    return x;
}

// ---------------------------------------------------------------------------

int GradedLieRing::dim(const MonoidElem& s) const
{
    auto it = comps_.find(s);
    return it == comps_.end() ? 0 : it->second.dim();
}

const Bimap* GradedLieRing::bracket(const MonoidElem& s, const MonoidElem& t) const
{
    auto it = brackets_.find({s, t});
    return it == brackets_.end() ? nullptr : &it->second;
}

int GradedModule::dim(const MonoidElem& s) const
{
    auto it = strata_.find(s);
    return it == strata_.end() ? 0 : it->second.dim();
}

const Bimap* GradedModule::action(const MonoidElem& s, const MonoidElem& t) const
{
    auto it = actions_.find({s, t});
    return it == actions_.end() ? nullptr : &it->second;
}

static Bimap commutation_tensor(const PcGroup& G, const Section& a, const Section& b, const Section& target)
{
    Bimap t(a.dim(), b.dim(), target.dim(), G.prime());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            auto c = target.coords(G, G.commutator(a.reps()[i], b.reps()[j]));
            for (int k = 0; k < target.dim(); ++k) t.at(i, j, k) = c[k];
        }
    return t;
}

GradedLieRing graded_lie_ring(const PcGroup& G, const Filter& f)
{
    GradedLieRing L;
    L.p_ = G.prime();
    L.monoid_ = f.monoid();
    for (const auto& s : f.grades()) {
        if (s.is_zero()) continue;
        Section sec;
        try {
            sec = Section(G, f.at(s), boundary_at(G, f, s));
        } catch (const Error& e) {
            throw Error("graded_lie_ring: grade " + to_string(s) + ": " + e.what() +
                        " (use exponent_p_lcs or linearize the filter)");
        }
        if (sec.dim() > 0) L.comps_.emplace(s, HomComponent{s, sec});
    }
    for (const auto& [s, cs] : L.comps_)
        for (const auto& [t, ct] : L.comps_) {
            auto it = L.comps_.find(s + t);
            if (it == L.comps_.end()) continue;
            L.brackets_.emplace(std::make_pair(s, t), commutation_tensor(G, cs.section, ct.section, it->second.section));
        }
    return L;
}

GradedModule graded_module(const PcGroup& G, const Filter& f, const Layering& l, const GradedLieRing& L)
{
    auto bad = verify_sift(G, f, l);
    if (!bad.empty()) throw Error("graded_module: the filter does not sift the layering: " + bad.front());
    GradedModule M;
    M.p_ = G.prime();
    for (const auto& s : l.grades()) {
        if (s.is_zero()) continue;
        Section sec;
        try {
            sec = Section(G, boundary_at(G, l, s), l.at(s));
        } catch (const Error& e) {
            throw Error("graded_module: stratum " + to_string(s) + ": " + e.what());
        }
        if (sec.dim() > 0) M.strata_.emplace(s, HomComponent{s, sec});
    }
    for (const auto& [s, cs] : L.components())
        for (const auto& [t, ct] : M.strata_) {
            auto it = M.strata_.find(s + t);
            if (it == M.strata_.end()) continue;
            Bimap mixed = commutation_tensor(G, cs.section, it->second.section, ct.section);
            Bimap act = shuffle(mixed);
            for (int& x : act.data) x = gf::mod(-x, M.p_);
            M.mixed_.emplace(std::make_pair(s, t), mixed);
            M.actions_.emplace(std::make_pair(s, t), std::move(act));
        }
    return M;
}

// ---------------------------------------------------------------------------

namespace {

gf::Vec unit(int n, int i)
{
    gf::Vec v(n, 0);
    v[i] = 1;
    return v;
}

gf::Vec apply_or_zero(const Bimap* b, const gf::Vec& u, const gf::Vec& v, int dim_out)
{
    return b ? b->apply(u, v) : gf::Vec(dim_out, 0);
}

}  // namespace

std::vector<std::string> check_jacobi(const GradedLieRing& L)
{
    std::vector<std::string> out;
    const int p = L.prime();
    const auto& C = L.components();
    for (const auto& [r, cr] : C)
        for (const auto& [s, cs] : C)
            for (const auto& [t, ct] : C) {
                const MonoidElem w = r + s + t;
                const int dw = L.dim(w);
                if (dw == 0) continue;
                for (int a = 0; a < cr.dim(); ++a)
                    for (int b = 0; b < cs.dim(); ++b)
                        for (int c = 0; c < ct.dim(); ++c) {
                            auto ua = unit(cr.dim(), a), ub = unit(cs.dim(), b), uc = unit(ct.dim(), c);
                            auto ab = apply_or_zero(L.bracket(r, s), ua, ub, L.dim(r + s));
                            auto bc = apply_or_zero(L.bracket(s, t), ub, uc, L.dim(s + t));
                            auto ca = apply_or_zero(L.bracket(t, r), uc, ua, L.dim(t + r));
                            auto sum = gf::vec_add(apply_or_zero(L.bracket(r + s, t), ab, uc, dw),
                                                   apply_or_zero(L.bracket(s + t, r), bc, ua, dw), p);
                            sum = gf::vec_add(sum, apply_or_zero(L.bracket(t + r, s), ca, ub, dw), p);
                            if (!gf::vec_is_zero(sum))
                                out.push_back("jacobi: grades " + to_string(r) + "," + to_string(s) + "," + to_string(t) +
                                              " basis " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
                        }
            }
    return out;
}

std::vector<std::string> check_alternating(const GradedLieRing& L)
{
    std::vector<std::string> out;
    const int p = L.prime();
    for (const auto& [key, B] : L.brackets()) {
        const auto& [s, t] = key;
        const Bimap* T = L.bracket(t, s);
        for (int i = 0; i < B.dU; ++i)
            for (int j = 0; j < B.dV; ++j)
                for (int k = 0; k < B.dW; ++k) {
                    int other = T ? T->at(j, i, k) : 0;
                    if ((B.at(i, j, k) + other) % p != 0)
                        out.push_back("antisymmetry: grades " + to_string(s) + "," + to_string(t) + " entry " +
                                      std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k));
                    if (s == t && i == j && B.at(i, i, k) != 0)
                        out.push_back("[x,x] != 0 at grade " + to_string(s) + " basis " + std::to_string(i));
                }
    }
    return out;
}

std::vector<std::string> check_module_law(const GradedLieRing& L, const GradedModule& M)
{
    std::vector<std::string> out;
    const int p = L.prime();
    for (const auto& [s, cs] : L.components())
        for (const auto& [t, ct] : L.components())
            for (const auto& [u, cu] : M.strata()) {
                const MonoidElem w = s + t + u;
                const int dw = M.dim(w);
                if (dw == 0) continue;
                for (int i = 0; i < cs.dim(); ++i)
                    for (int j = 0; j < ct.dim(); ++j)
                        for (int k = 0; k < cu.dim(); ++k) {
                            auto x = unit(cs.dim(), i), y = unit(ct.dim(), j), f = unit(cu.dim(), k);
                            auto xy = apply_or_zero(L.bracket(s, t), x, y, L.dim(s + t));
                            auto lhs = apply_or_zero(M.action(s + t, u), xy, f, dw);
                            auto yf = apply_or_zero(M.action(t, u), y, f, M.dim(t + u));
                            auto xf = apply_or_zero(M.action(s, u), x, f, M.dim(s + u));
                            auto rhs = gf::vec_add(apply_or_zero(M.action(s, t + u), x, yf, dw),
                                                   gf::vec_scale(apply_or_zero(M.action(t, s + u), y, xf, dw), -1, p), p);
                            if (lhs != rhs)
                                out.push_back("module law: grades " + to_string(s) + "," + to_string(t) + "," + to_string(u) +
                                              " basis " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k));
                        }
            }
    return out;
}

GroupElem random_element(const PcGroup& G, const Subgroup& H, std::mt19937& rng)
{
    std::uniform_int_distribution<int> pick(0, G.prime() - 1);
    GroupElem x = G.identity();
    for (const auto& g : H.gens()) x = G.multiply(x, G.power(g, pick(rng)));
    return x;
}

std::vector<std::string> check_integral_module(const PcGroup& G, const Filter& f, const Layering& l, int trials, unsigned seed)
{
    if (f.monoid().dim() != 1 || l.monoid().dim() != 1) throw Error("integral mode needs N-graded inputs");
    std::vector<std::string> out;
    std::mt19937 rng(seed);
    const int fmax = f.box()[0], lmax = l.box()[0];
    if (fmax < 1 || lmax < 1) return out;
    std::uniform_int_distribution<int> fs(1, fmax), ls(1, lmax);
    auto phi = [&](int s) { return f.at(MonoidElem({s})); };
    auto pi = [&](int s) { return l.at(MonoidElem({s})); };
    auto dpi = [&](int s) { return boundary_at(G, l, MonoidElem({s})); };
    auto in = [&](const GroupElem& x, const Subgroup& H) { return membership(G, x, H); };
    for (int trial = 0; trial < trials; ++trial) {
        int s = fs(rng), t = fs(rng), u = ls(rng);
        GroupElem x = random_element(G, phi(s), rng), y = random_element(G, phi(t), rng);
        GroupElem z = random_element(G, dpi(s + t + u), rng);
        GroupElem lhs = G.commutator(G.commutator(x, y), z);
        GroupElem rhs = G.multiply(G.commutator(x, G.commutator(y, z)), G.inverse(G.commutator(y, G.commutator(x, z))));
        if (!in(G.multiply(G.inverse(lhs), rhs), pi(u)))
            out.push_back("integral module law fails: s=" + std::to_string(s) + " t=" + std::to_string(t) + " u=" +
                          std::to_string(u) + " x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z));
        // Biadditivity of the mixed product L_s x L^{s+t} -> L^t.
        GroupElem x2 = random_element(G, phi(s), rng);
        GroupElem z1 = random_element(G, dpi(s + t), rng), z2 = random_element(G, dpi(s + t), rng);
        GroupElem a = G.commutator(G.multiply(x, x2), z1);
        GroupElem b = G.multiply(G.commutator(x, z1), G.commutator(x2, z1));
        GroupElem c = G.commutator(x, G.multiply(z1, z2));
        GroupElem d = G.multiply(G.commutator(x, z1), G.commutator(x, z2));
        if (!in(G.multiply(G.inverse(a), b), pi(t)) || !in(G.multiply(G.inverse(c), d), pi(t)))
            out.push_back("mixed product not biadditive: s=" + std::to_string(s) + " t=" + std::to_string(t));
    }
    return out;
}

// ---------------------------------------------------------------------------

long long AbelianDual::order() const
{
    long long o = 1;
    for (auto d : invariants) o *= d;
    return o;
}

std::vector<long long> AbelianDual::coords(const PcGroup& G, const GroupElem& x) const
{
    auto e = sift_exponents(G, seq, x);
    std::vector<long long> v(reps.size(), 0);
    for (size_t i = 0; i < seq.size(); ++i)
        if (seq_rep_index[i] >= 0) v[seq_rep_index[i]] = e[i];
    std::vector<long long> a(invariants.size(), 0);
    for (size_t c = 0; c < invariants.size(); ++c) {
        long long acc = 0;
        for (size_t r = 0; r < reps.size(); ++r) acc += v[r] * transform[r][c];
        a[c] = ((acc % invariants[c]) + invariants[c]) % invariants[c];
    }
    return a;
}

std::pair<long long, long long> AbelianDual::pairing(const std::vector<long long>& x, const std::vector<long long>& f) const
{
    long long den = 1;
    for (auto d : invariants) den = std::max(den, d);
    long long num = 0;
    for (size_t i = 0; i < invariants.size(); ++i) num = (num + (x[i] % invariants[i]) * (f[i] % invariants[i]) % den * (den / invariants[i])) % den;
    num = (num + den) % den;
    long long g = std::gcd(num, den);
    if (num == 0) return {0, 1};
    return {num / g, den / g};
}

namespace {

// Smith normal form of a square integer matrix; column operations are
// accumulated in V so that Row(R) V = Row(D).
std::vector<long long> smith(std::vector<std::vector<long long>> R, std::vector<std::vector<long long>>& V)
{
    const int n = static_cast<int>(R.size());
    V.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) V[i][i] = 1;
    auto col_op = [&](int dst, int src, long long q) {  // col dst -= q * col src
        for (int r = 0; r < n; ++r) R[r][dst] -= q * R[r][src];
        for (int r = 0; r < n; ++r) V[r][dst] -= q * V[r][src];
    };
    auto swap_cols = [&](int a, int b) {
        for (int r = 0; r < n; ++r) std::swap(R[r][a], R[r][b]);
        for (int r = 0; r < n; ++r) std::swap(V[r][a], V[r][b]);
    };
    for (int t = 0; t < n; ++t) {
        while (true) {
            int bi = -1, bj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (R[i][j] != 0 && (bi < 0 || std::llabs(R[i][j]) < std::llabs(R[bi][bj]))) bi = i, bj = j;
            if (bi < 0) return {};
            std::swap(R[t], R[bi]);
            swap_cols(t, bj);
            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                long long q = R[i][t] / R[t][t];
                for (int j = 0; j < n; ++j) R[i][j] -= q * R[t][j];
                if (R[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                col_op(j, t, R[t][j] / R[t][t]);
                if (R[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            int bad = -1;
            for (int i = t + 1; i < n && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (R[i][j] % R[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = 0; j < n; ++j) R[t][j] += R[bad][j];
        }
    }
    std::vector<long long> d(n);
    for (int i = 0; i < n; ++i) d[i] = std::llabs(R[i][i]);
    return d;
}

}  // namespace

AbelianDual dual_abelian(const PcGroup& G, const Subgroup& top, const Subgroup& bottom)
{
    if (!is_subset(G, bottom, top)) throw Error("dual_abelian: bottom is not contained in top");
    AbelianDual D;
    D.top = top;
    D.bottom = bottom;
    build_sequence(top, bottom, D.seq, D.seq_rep_index, D.reps);
    for (size_t i = 0; i < D.reps.size(); ++i)
        for (size_t j = i + 1; j < D.reps.size(); ++j)
            if (!membership(G, G.commutator(D.reps[i], D.reps[j]), bottom)) throw Error("dual_abelian: section is not abelian");
    const int k = static_cast<int>(D.reps.size());
    std::vector<std::vector<long long>> R(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i) {
        auto e = sift_exponents(G, D.seq, G.power(D.reps[i], G.prime()));
        for (size_t s = 0; s < D.seq.size(); ++s)
            if (D.seq_rep_index[s] >= 0) R[i][D.seq_rep_index[s]] -= e[s];
        R[i][i] += G.prime();
    }
    std::vector<std::vector<long long>> V;
    auto d = smith(R, V);
    std::vector<std::pair<long long, int>> keep;
    for (int c = 0; c < static_cast<int>(d.size()); ++c)
        if (d[c] > 1) keep.emplace_back(d[c], c);
    std::stable_sort(keep.begin(), keep.end());
    D.transform.assign(k, {});
    for (auto [dc, c] : keep) {
        D.invariants.push_back(dc);
        for (int r = 0; r < k; ++r) D.transform[r].push_back(V[r][c]);
    }
    return D;
}

}  // namespace filterlab
