#include "filterlab/scalars.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace filterlab {

using gf::Matrix;
using gf::Subspace;
using gf::Vec;

std::string to_string(RingKind k)
{
    switch (k) {
    case RingKind::Der: return "Der";
    case RingKind::Left: return "Left";
    case RingKind::Mid: return "Mid";
    case RingKind::Right: return "Right";
    case RingKind::Cent: return "Cent";
    }
    return "?";
}

std::string to_string(Side s)
{
    switch (s) {
    case Side::U: return "U";
    case Side::V: return "V";
    case Side::W: return "W";
    }
    return "?";
}

namespace {

Vec flatten(const Matrix& m) { return m.data(); }

Matrix unflatten(const Vec& v, int n, int p)
{
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = v[static_cast<size_t>(i) * n + j];
    return m;
}

Matrix rows_matrix(const std::vector<Vec>& rows, int cols, int p)
{
    Matrix m(0, cols, p);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

// Left nullspace that treats a matrix with no columns as imposing nothing.
Matrix solutions(const Matrix& a)
{
    if (a.cols() == 0) return Matrix::identity(a.rows(), a.prime());
    return gf::left_nullspace(a);
}

MatAlgebra from_span(const std::vector<Matrix>& ms, int n, int p)
{
    std::vector<Vec> flat;
    for (const auto& m : ms) flat.push_back(flatten(m));
    Subspace s = Subspace::span(flat, n * n, p);
    MatAlgebra A{n, p, {}};
    for (int i = 0; i < s.dim(); ++i) A.basis.push_back(unflatten(s.basis().row(i), n, p));
    return A;
}

Matrix power(const Matrix& m, int e)
{
    Matrix r = Matrix::identity(m.rows(), m.prime());
    for (int i = 0; i < e; ++i) r = r * m;
    return r;
}

// Annihilator of a subspace, as rows x with s.basis() * x^T = 0.
Matrix annihilator(const Subspace& s)
{
    if (s.dim() == 0) return Matrix::identity(s.ambient(), s.prime());
    return gf::right_nullspace(s.basis());
}

Vec project(const Vec& v, const Matrix& ann)
{
    const int p = ann.prime();
    Vec out(ann.rows(), 0);
    for (int r = 0; r < ann.rows(); ++r) {
        long long acc = 0;
        for (size_t j = 0; j < v.size(); ++j) acc += static_cast<long long>(v[j]) * ann(r, static_cast<int>(j));
        out[r] = gf::mod(acc, p);
    }
    return out;
}

Subspace spin(const MatAlgebra& A, const Subspace& base, const Vec& v)
{
    Subspace S = base;
    std::vector<Vec> queue;
    if (!S.contains(v)) {
        S = S + Subspace::span({v}, A.n, A.p);
        queue.push_back(v);
    }
    while (!queue.empty()) {
        Vec x = queue.back();
        queue.pop_back();
        for (const auto& b : A.basis) {
            Vec y = gf::vec_mul(x, b);
            if (!S.contains(y)) {
                S = S + Subspace::span({y}, A.n, A.p);
                queue.push_back(y);
            }
        }
    }
    return S;
}

// Calls f on one representative of every projective point of `within`
// outside `base`, via a complement of base inside within; stops when f
// returns true.
template <class F>
bool for_points_outside(const Subspace& within, const Subspace& base, F&& f)
{
    std::vector<Vec> comp;
    Subspace acc = base;
    for (const auto& v : within.vectors()) {
        if (!acc.contains(v)) {
            comp.push_back(v);
            acc = acc + Subspace::span({v}, within.ambient(), within.prime());
        }
    }
    const int c = static_cast<int>(comp.size());
    const int p = within.prime();
    Vec coeff(c, 0);
    const int n = within.ambient();
    for (int lead = 0; lead < c; ++lead) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[lead] = 1;
        while (true) {
            Vec v(n, 0);
            for (int i = lead; i < c; ++i)
                if (coeff[i]) v = gf::vec_add(v, gf::vec_scale(comp[i], coeff[i], p), p);
            if (f(v)) return true;
            int i = c - 1;
            while (i > lead && coeff[i] == p - 1) coeff[i--] = 0;
            if (i == lead) break;
            ++coeff[i];
        }
    }
    return false;
}

long long ipow(long long b, int e)
{
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
        if (r > (1LL << 40)) return r;
    }
    return r;
}

}  // namespace

std::optional<Vec> MatAlgebra::coords(const Matrix& m) const
{
    if (basis.empty()) {
        if (m.is_zero()) return Vec{};
        return std::nullopt;
    }
    std::vector<Vec> rows;
    for (const auto& b : basis) rows.push_back(flatten(b));
    Vec x;
    if (!gf::solve_left(rows_matrix(rows, n * n, p), flatten(m), x)) return std::nullopt;
    return x;
}

Matrix MatAlgebra::combine(const Vec& c) const
{
    Matrix m(n, n, p);
    for (size_t k = 0; k < basis.size(); ++k)
        if (c[k]) m = m + basis[k].scaled(c[k]);
    return m;
}

MatAlgebra enveloping_algebra(const std::vector<Matrix>& gens, int n, int p)
{
    Subspace S(n * n, p);
    std::vector<Matrix> queue;
    std::vector<Matrix> basis;
    auto add = [&](const Matrix& m) {
        Vec f = flatten(m);
        if (S.contains(f)) return;
        S = S + Subspace::span({f}, n * n, p);
        queue.push_back(m);
    };
    add(Matrix::identity(n, p));
    for (const auto& g : gens) add(g);
    while (!queue.empty()) {
        Matrix x = queue.back();
        queue.pop_back();
        for (const auto& g : gens) add(x * g);
    }
    MatAlgebra A{n, p, {}};
    for (int i = 0; i < S.dim(); ++i) A.basis.push_back(unflatten(S.basis().row(i), n, p));
    return A;
}

MatAlgebra center(const MatAlgebra& A)
{
    const int d = A.dim();
    std::vector<Vec> rows(d);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) {
            Vec c = flatten(A.basis[k] * A.basis[j] - A.basis[j] * A.basis[k]);
            rows[k].insert(rows[k].end(), c.begin(), c.end());
        }
    Matrix sol = solutions(rows_matrix(rows, d * A.n * A.n, A.p));
    std::vector<Matrix> ms;
    for (int r = 0; r < sol.rows(); ++r) ms.push_back(A.combine(sol.row(r)));
    return from_span(ms, A.n, A.p);
}

std::optional<std::vector<Subspace>> composition_series(const MatAlgebra& A)
{
    if (ipow(A.p, A.n) > radical_point_cap) return std::nullopt;
    std::vector<Subspace> series{Subspace(A.n, A.p)};
    const Subspace full = Subspace::full(A.n, A.p);
    while (!series.back().is_full()) {
        const Subspace& W = series.back();
        Subspace best = full;
        bool shrunk = true;
        while (shrunk && best.dim() > W.dim() + 1) {
            shrunk = false;
            for_points_outside(best, W, [&](const Vec& v) {
                Subspace S = spin(A, W, v);
                if (S.dim() < best.dim()) {
                    best = S;
                    shrunk = true;
                    return true;
                }
                return false;
            });
        }
        series.push_back(best);
    }
    return series;
}

std::optional<MatAlgebra> radical(const MatAlgebra& A)
{
    auto series = composition_series(A);
    if (!series) return std::nullopt;
    const int d = A.dim();
    std::vector<Vec> rows(d);
    for (size_t i = 1; i < series->size(); ++i) {
        Matrix ann = annihilator((*series)[i - 1]);
        for (const auto& w : (*series)[i].vectors())
            for (int k = 0; k < d; ++k) {
                Vec c = project(gf::vec_mul(w, A.basis[k]), ann);
                rows[k].insert(rows[k].end(), c.begin(), c.end());
            }
    }
    const int cols = d ? static_cast<int>(rows[0].size()) : 0;
    Matrix sol = solutions(rows_matrix(rows, cols, A.p));
    std::vector<Matrix> ms;
    for (int r = 0; r < sol.rows(); ++r) ms.push_back(A.combine(sol.row(r)));
    return from_span(ms, A.n, A.p);
}

namespace {

// Splits e by the distinct values of x = e*k, all computed modulo the span
// encoded by `ann` (flattened coordinates projected through ann).
std::vector<Matrix> split_by(const Matrix& e, const Matrix& k, const std::function<Vec(const Matrix&)>& reduce)
{
    const int p = e.prime();
    Matrix x = e * k;
    // Minimal polynomial of x inside the algebra with unit e.
    std::vector<Vec> powers{reduce(e)};
    Matrix xp = e;
    gf::Poly minpoly;
    while (true) {
        xp = xp * x;
        Vec r = reduce(xp);
        Vec sol;
        if (gf::solve_left(rows_matrix(powers, static_cast<int>(r.size()), p), r, sol)) {
            minpoly.assign(powers.size() + 1, 0);
            for (size_t i = 0; i < sol.size(); ++i) minpoly[i] = gf::mod(-sol[i], p);
            minpoly.back() = 1;
            break;
        }
        powers.push_back(r);
    }
    std::vector<int> roots;
    for (int c = 0; c < p; ++c) {
        long long acc = 0;
        for (int i = static_cast<int>(minpoly.size()) - 1; i >= 0; --i) acc = gf::mod(acc * c + minpoly[i], p);
        if (acc == 0) roots.push_back(c);
    }
    if (roots.size() <= 1) return {e};
    std::vector<Matrix> out;
    for (int c : roots) {
        Matrix ec = e;
        for (int c2 : roots) {
            if (c2 == c) continue;
            Matrix factor = (x - e.scaled(c2)).scaled(gf::inv(gf::mod(c - c2, p), p));
            ec = ec * factor;
        }
        out.push_back(ec);
    }
    return out;
}

std::vector<Matrix> split_all(const std::vector<Matrix>& gens, int n, int p, const std::function<Vec(const Matrix&)>& reduce)
{
    std::vector<Matrix> idem{Matrix::identity(n, p)};
    for (const auto& k : gens) {
        std::vector<Matrix> next;
        for (const auto& e : idem) {
            auto parts = split_by(e, k, reduce);
            next.insert(next.end(), parts.begin(), parts.end());
        }
        idem = std::move(next);
    }
    return idem;
}

}  // namespace

std::vector<Matrix> split_idempotents(const MatAlgebra& A)
{
    const int d = A.dim();
    // a -> a^p - a is linear on a commutative algebra in characteristic p;
    // its kernel is spanned by the primitive idempotents.
    std::vector<Vec> rows;
    for (int k = 0; k < d; ++k) {
        auto c = A.coords(power(A.basis[k], A.p));
        if (!c) throw std::invalid_argument("split_idempotents: algebra not closed");
        (*c)[k] = gf::mod((*c)[k] - 1, A.p);
        rows.push_back(*c);
    }
    Matrix ker = solutions(rows_matrix(rows, d, A.p));
    std::vector<Matrix> gens;
    for (int r = 0; r < ker.rows(); ++r) gens.push_back(A.combine(ker.row(r)));
    auto reduce = [](const Matrix& m) { return flatten(m); };
    return split_all(gens, A.n, A.p, reduce);
}

std::optional<std::vector<MatAlgebra>> central_ideals_mod_radical(const MatAlgebra& A, const MatAlgebra& rad)
{
    const int d = A.dim();
    const int p = A.p;
    std::vector<Vec> radc;
    for (const auto& r : rad.basis) radc.push_back(*A.coords(r));
    Matrix ann = annihilator(Subspace::span(radc, d, p));
    auto reduce = [&](const Matrix& m) {
        auto c = A.coords(m);
        if (!c) throw std::invalid_argument("central_ideals_mod_radical: algebra not closed");
        return project(*c, ann);
    };
    // Preimage of the center of A/rad.
    std::vector<Vec> rows(d);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) {
            Vec c = reduce(A.basis[k] * A.basis[j] - A.basis[j] * A.basis[k]);
            rows[k].insert(rows[k].end(), c.begin(), c.end());
        }
    Matrix zsol = solutions(rows_matrix(rows, d ? static_cast<int>(rows[0].size()) : 0, p));
    std::vector<Matrix> Z;
    for (int r = 0; r < zsol.rows(); ++r) Z.push_back(A.combine(zsol.row(r)));
    // Frobenius fixed points modulo rad.
    std::vector<Vec> frows;
    for (const auto& z : Z) frows.push_back(reduce(power(z, p) - z));
    Matrix ksol = solutions(rows_matrix(frows, ann.rows(), p));
    std::vector<Matrix> K;
    for (int r = 0; r < ksol.rows(); ++r) {
        Matrix m(A.n, A.n, p);
        Vec c = ksol.row(r);
        for (size_t i = 0; i < Z.size(); ++i)
            if (c[i]) m = m + Z[i].scaled(c[i]);
        K.push_back(m);
    }
    std::vector<MatAlgebra> ideals;
    for (const auto& e : split_all(K, A.n, p, reduce)) {
        std::vector<Matrix> span = rad.basis;
        for (const auto& b : A.basis) span.push_back(e * b);
        ideals.push_back(from_span(span, A.n, p));
    }
    return ideals;
}

int ScalarAlgebra::side_dim(Side s) const
{
    switch (s) {
    case Side::U: return dU;
    case Side::V: return dV;
    case Side::W: return dW;
    }
    return 0;
}

bool ScalarAlgebra::acts_on(Side s) const
{
    return std::find(sides.begin(), sides.end(), s) != sides.end();
}

Matrix ScalarAlgebra::side_map(const Matrix& rep, Side s) const
{
    for (size_t b = 0; b < sides.size(); ++b) {
        if (sides[b] != s) continue;
        const int d = side_dim(s), o = offsets[b];
        Matrix m(d, d, p);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(i, j) = rep(o + i, o + j);
        return (s == Side::V && transposed_v) ? m.transpose() : m;
    }
    throw std::invalid_argument("side_map: ring does not act on " + to_string(s));
}

namespace {

struct Term {
    Side side;
    int sign;
};

ScalarAlgebra solve_ring(const Bimap& b, RingKind kind, const std::vector<Side>& sides,
                         const std::vector<std::vector<Term>>& systems)
{
    ScalarAlgebra A;
    A.kind = kind;
    A.dU = b.dU;
    A.dV = b.dV;
    A.dW = b.dW;
    A.p = b.p;
    A.sides = sides;
    A.transposed_v = kind == RingKind::Mid;
    int n = 0;
    std::map<Side, int> unk_off;
    int nunk = 0;
    for (Side s : sides) {
        A.offsets.push_back(n);
        n += A.side_dim(s);
        unk_off[s] = nunk;
        nunk += A.side_dim(s) * A.side_dim(s);
    }
    const int p = b.p;
    const int neq = b.dU * b.dV * b.dW;
    Matrix sys(nunk, neq * static_cast<int>(systems.size()), p);
    for (size_t q = 0; q < systems.size(); ++q) {
        for (int i = 0; i < b.dU; ++i)
            for (int j = 0; j < b.dV; ++j)
                for (int m = 0; m < b.dW; ++m) {
                    const int col = static_cast<int>(q) * neq + (i * b.dV + j) * b.dW + m;
                    for (const Term& t : systems[q]) {
                        const int o = unk_off.at(t.side);
                        switch (t.side) {
                        case Side::U:
                            for (int a = 0; a < b.dU; ++a)
                                sys(o + i * b.dU + a, col) = gf::mod(sys(o + i * b.dU + a, col) + t.sign * b.at(a, j, m), p);
                            break;
                        case Side::V:
                            for (int c = 0; c < b.dV; ++c)
                                sys(o + j * b.dV + c, col) = gf::mod(sys(o + j * b.dV + c, col) + t.sign * b.at(i, c, m), p);
                            break;
                        case Side::W:
                            for (int k = 0; k < b.dW; ++k)
                                sys(o + k * b.dW + m, col) = gf::mod(sys(o + k * b.dW + m, col) + t.sign * b.at(i, j, k), p);
                            break;
                        }
                    }
                }
    }
    Matrix sol = solutions(sys);
    A.alg = MatAlgebra{n, p, {}};
    for (int r = 0; r < sol.rows(); ++r) {
        Vec x = sol.row(r);
        Matrix rep(n, n, p);
        for (size_t bl = 0; bl < sides.size(); ++bl) {
            const Side s = sides[bl];
            const int d = A.side_dim(s), o = A.offsets[bl], uo = unk_off.at(s);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const int v = x[uo + i * d + j];
                    if (A.transposed_v && s == Side::V) rep(o + j, o + i) = v;
                    else rep(o + i, o + j) = v;
                }
        }
        A.alg.basis.push_back(rep);
    }
    return A;
}

}  // namespace

ScalarAlgebra derivation_algebra(const Bimap& b)
{
    return solve_ring(b, RingKind::Der, {Side::U, Side::V, Side::W},
                      {{{Side::U, 1}, {Side::V, 1}, {Side::W, -1}}});
}

ScalarAlgebra scalar_ring(const Bimap& b, RingKind kind)
{
    switch (kind) {
    case RingKind::Left:
        return solve_ring(b, kind, {Side::U, Side::W}, {{{Side::U, 1}, {Side::W, -1}}});
    case RingKind::Mid:
        return solve_ring(b, kind, {Side::U, Side::V}, {{{Side::U, 1}, {Side::V, -1}}});
    case RingKind::Right:
        return solve_ring(b, kind, {Side::V, Side::W}, {{{Side::V, 1}, {Side::W, -1}}});
    default:
        throw std::invalid_argument("scalar_ring: kind must be Left, Mid or Right");
    }
}

ScalarAlgebra centroid(const Bimap& b)
{
    ScalarAlgebra A = solve_ring(b, RingKind::Cent, {Side::U, Side::V, Side::W},
                                 {{{Side::U, 1}, {Side::W, -1}}, {{Side::V, 1}, {Side::W, -1}}});
    A.alg = center(A.alg);
    return A;
}

std::vector<std::string> check_defining_identity(const Bimap& b, const ScalarAlgebra& A)
{
    std::vector<std::string> out;
    const int p = b.p;
    auto unit = [&](int d, int i) {
        Vec v(d, 0);
        v[i] = 1;
        return v;
    };
    for (int k = 0; k < A.dim(); ++k) {
        const Matrix& rep = A.alg.basis[k];
        Matrix F = A.acts_on(Side::U) ? A.side_map(rep, Side::U) : Matrix();
        Matrix G = A.acts_on(Side::V) ? A.side_map(rep, Side::V) : Matrix();
        Matrix H = A.acts_on(Side::W) ? A.side_map(rep, Side::W) : Matrix();
        for (int i = 0; i < b.dU; ++i)
            for (int j = 0; j < b.dV; ++j) {
                Vec u = unit(b.dU, i), v = unit(b.dV, j);
                Vec uv = b.apply(u, v);
                std::vector<Vec> zero;
                switch (A.kind) {
                case RingKind::Der:
                    zero.push_back(gf::vec_add(gf::vec_add(b.apply(gf::vec_mul(u, F), v), b.apply(u, gf::vec_mul(v, G)), p),
                                               gf::vec_scale(gf::vec_mul(uv, H), p - 1, p), p));
                    break;
                case RingKind::Left:
                    zero.push_back(gf::vec_add(b.apply(gf::vec_mul(u, F), v), gf::vec_scale(gf::vec_mul(uv, H), p - 1, p), p));
                    break;
                case RingKind::Mid:
                    zero.push_back(gf::vec_add(b.apply(gf::vec_mul(u, F), v), gf::vec_scale(b.apply(u, gf::vec_mul(v, G)), p - 1, p), p));
                    break;
                case RingKind::Right:
                    zero.push_back(gf::vec_add(b.apply(u, gf::vec_mul(v, G)), gf::vec_scale(gf::vec_mul(uv, H), p - 1, p), p));
                    break;
                case RingKind::Cent:
                    zero.push_back(gf::vec_add(b.apply(gf::vec_mul(u, F), v), gf::vec_scale(gf::vec_mul(uv, H), p - 1, p), p));
                    zero.push_back(gf::vec_add(b.apply(u, gf::vec_mul(v, G)), gf::vec_scale(gf::vec_mul(uv, H), p - 1, p), p));
                    break;
                }
                for (const auto& z : zero)
                    if (!gf::vec_is_zero(z))
                        out.push_back(to_string(A.kind) + " basis " + std::to_string(k) + " fails at (e" + std::to_string(i) + ", f" +
                                      std::to_string(j) + ")");
            }
    }
    return out;
}

std::vector<std::string> check_closure(const ScalarAlgebra& A)
{
    std::vector<std::string> out;
    const auto& B = A.alg.basis;
    const std::string name = to_string(A.kind);
    if (A.kind != RingKind::Der && !A.alg.contains(A.identity())) out.push_back(name + " does not contain the identity");
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = 0; j < B.size(); ++j) {
            const std::string at = " (" + std::to_string(i) + ", " + std::to_string(j) + ")";
            if (A.kind == RingKind::Der) {
                if (!A.alg.contains(B[i] * B[j] - B[j] * B[i])) out.push_back(name + " not closed under brackets" + at);
                continue;
            }
            if (!A.alg.contains(B[i] * B[j])) out.push_back(name + " not closed under products" + at);
            if (A.kind == RingKind::Cent && !(B[i] * B[j] == B[j] * B[i])) out.push_back(name + " not commutative" + at);
        }
    return out;
}

namespace {

Subspace side_image(const ScalarAlgebra& A, const std::vector<Matrix>& reps, Side s)
{
    const int d = A.side_dim(s);
    std::vector<Vec> rows;
    for (const auto& r : reps) {
        Matrix m = A.side_map(r, s);
        for (int i = 0; i < d; ++i) rows.push_back(m.row(i));
    }
    return Subspace::span(rows, d, A.p);
}

Subspace common_kernel(const std::vector<Matrix>& maps, int d, int p)
{
    std::vector<Vec> rows(d);
    for (const auto& m : maps)
        for (int i = 0; i < d; ++i) {
            Vec r = m.row(i);
            rows[i].insert(rows[i].end(), r.begin(), r.end());
        }
    const int cols = maps.empty() ? 0 : static_cast<int>(rows[0].size());
    Matrix k = solutions(rows_matrix(rows, cols, p));
    std::vector<Vec> vs;
    for (int r = 0; r < k.rows(); ++r) vs.push_back(k.row(r));
    return Subspace::span(vs, d, p);
}

Subspace side_kernel(const ScalarAlgebra& A, const std::vector<Matrix>& reps, Side s)
{
    std::vector<Matrix> maps;
    for (const auto& r : reps) maps.push_back(A.side_map(r, s));
    return common_kernel(maps, A.side_dim(s), A.p);
}

}  // namespace

std::string source_label(const Emission& e)
{
    return e.tag == "Radical" ? "Radical" : to_string(e.ring);
}

ScalarAnalysis characteristic_subspaces(const Bimap& b)
{
    ScalarAnalysis out;
    const ScalarAlgebra der = derivation_algebra(b);
    const ScalarAlgebra left = scalar_ring(b, RingKind::Left);
    const ScalarAlgebra mid = scalar_ring(b, RingKind::Mid);
    const ScalarAlgebra right = scalar_ring(b, RingKind::Right);
    const ScalarAlgebra cent = centroid(b);
    out.dims.der = der.dim();
    out.dims.left = left.dim();
    out.dims.mid = mid.dim();
    out.dims.right = right.dim();
    out.dims.cent = cent.dim();

    const Side all[] = {Side::U, Side::V, Side::W};
    std::vector<Emission> raw;
    auto emit = [&](Side s, const Subspace& sp, RingKind k, const std::string& tag) { raw.push_back({s, sp, k, tag}); };

    // Der: radicals of the enveloping algebras on each side.
    for (Side s : all) {
        const int d = der.side_dim(s);
        if (d == 0) continue;
        std::vector<Matrix> gens;
        for (const auto& r : der.alg.basis) gens.push_back(der.side_map(r, s));
        MatAlgebra env = enveloping_algebra(gens, d, b.p);
        auto rad = radical(env);
        if (!rad || rad->dim() == 0) continue;
        std::vector<Vec> rows;
        for (const auto& m : rad->basis)
            for (int i = 0; i < d; ++i) rows.push_back(m.row(i));
        emit(s, Subspace::span(rows, d, b.p), RingKind::Der, "radical-image");
        emit(s, common_kernel(rad->basis, d, b.p), RingKind::Der, "radical-kernel");
    }

    auto radical_emissions = [&](const ScalarAlgebra& A, const MatAlgebra& rad) {
        if (rad.dim() == 0) return;
        for (Side s : A.sides) {
            if (A.side_dim(s) == 0) continue;
            emit(s, side_image(A, rad.basis, s), A.kind, "radical-image");
            emit(s, side_kernel(A, rad.basis, s), A.kind, "radical-kernel");
        }
    };

    if (auto rad = radical(mid.alg)) {
        out.dims.mid_radical = rad->dim();
        radical_emissions(mid, *rad);
        if (auto ideals = central_ideals_mod_radical(mid.alg, *rad); ideals && ideals->size() > 1)
            for (const auto& I : *ideals)
                for (Side s : mid.sides)
                    if (mid.side_dim(s)) emit(s, side_image(mid, I.basis, s), RingKind::Mid, "idempotent");
    }
    for (const ScalarAlgebra* A : {&left, &right})
        if (auto rad = radical(A->alg)) radical_emissions(*A, *rad);
    if (auto rad = radical(cent.alg)) {
        out.dims.cent_radical = rad->dim();
        radical_emissions(cent, *rad);
    }
    auto idem = split_idempotents(cent.alg);
    out.dims.cent_idempotents = static_cast<int>(idem.size());
    if (idem.size() > 1)
        for (const auto& e : idem)
            for (Side s : cent.sides)
                if (cent.side_dim(s)) emit(s, side_image(cent, {e}, s), RingKind::Cent, "idempotent");

    // Radicals of the bimap itself.
    {
        std::vector<Matrix> byV;  // u -> u o f_j, one dU x dW map per j
        for (int j = 0; j < b.dV; ++j) {
            Matrix m(b.dU, b.dW, b.p);
            for (int i = 0; i < b.dU; ++i)
                for (int k = 0; k < b.dW; ++k) m(i, k) = b.at(i, j, k);
            byV.push_back(m);
        }
        std::vector<Matrix> byU;
        for (int i = 0; i < b.dU; ++i) {
            Matrix m(b.dV, b.dW, b.p);
            for (int j = 0; j < b.dV; ++j)
                for (int k = 0; k < b.dW; ++k) m(j, k) = b.at(i, j, k);
            byU.push_back(m);
        }
        if (b.dU) emit(Side::U, common_kernel(byV, b.dU, b.p), RingKind::Der, "Radical");
        if (b.dV) emit(Side::V, common_kernel(byU, b.dV, b.p), RingKind::Der, "Radical");
    }

    auto invariant = [&](const Emission& e) {
        for (const auto& r : der.alg.basis)
            if (!e.space.contains(e.space.image(der.side_map(r, e.side)))) return false;
        return true;
    };
    std::vector<std::pair<Side, Subspace>> seen;
    for (const auto& e : raw) {
        if (e.space.is_zero() || e.space.is_full()) continue;
        if (!invariant(e)) continue;
        const std::string label = source_label(e);
        if (std::find(out.sources.begin(), out.sources.end(), label) == out.sources.end()) out.sources.push_back(label);
        auto key = std::make_pair(e.side, e.space);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        out.emissions.push_back(e);
    }
    return out;
}

}  // namespace filterlab
