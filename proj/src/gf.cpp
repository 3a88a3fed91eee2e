#include "filterlab/gf.hpp"

#include <stdexcept>

namespace filterlab::gf {

int mod(long long a, int p)
{
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int inv(int a, int p)
{
    a = mod(a, p);
    if (a == 0) throw std::domain_error("gf::inv: zero has no inverse");
    // Fermat; p is small.
    long long r = 1, b = a;
    int e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

Matrix::Matrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<size_t>(rows) * cols, 0)
{
}

Matrix Matrix::identity(int n, int p)
{
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols, int p)
{
    Matrix m(static_cast<int>(rows.size()), cols, p);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
    return m;
}

Vec Matrix::row(int i) const
{
    return Vec(data_.begin() + static_cast<long>(i) * cols_, data_.begin() + static_cast<long>(i + 1) * cols_);
}

void Matrix::set_row(int i, const Vec& v)
{
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix::set_row: length mismatch");
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = mod(v[j], p_);
}

void Matrix::append_row(const Vec& v)
{
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix::append_row: length mismatch");
    for (int x : v) data_.push_back(mod(x, p_));
    ++rows_;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
    Matrix r(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) = (r(i, j) + a * o(k, j)) % p_;
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::operator+: shape mismatch");
    Matrix r(*this);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + o.data_[i]) % p_;
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::operator-: shape mismatch");
    Matrix r(*this);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = mod(data_[i] - o.data_[i], p_);
    return r;
}

Matrix Matrix::scaled(int c) const
{
    Matrix r(*this);
    for (auto& x : r.data_) x = mod(static_cast<long long>(x) * c, p_);
    return r;
}

Matrix Matrix::transpose() const
{
    Matrix r(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Matrix::is_zero() const
{
    for (int x : data_)
        if (x != 0) return false;
    return true;
}

Vec vec_mul(const Vec& v, const Matrix& m)
{
    if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("vec_mul: shape mismatch");
    const int p = m.prime();
    Vec r(m.cols(), 0);
    for (int k = 0; k < m.rows(); ++k) {
        if (v[k] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) r[j] = (r[j] + v[k] * m(k, j)) % p;
    }
    return r;
}

Vec vec_add(const Vec& a, const Vec& b, int p)
{
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] + b[i], p);
    return r;
}

Vec vec_scale(const Vec& a, int c, int p)
{
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod(static_cast<long long>(a[i]) * c, p);
    return r;
}

bool vec_is_zero(const Vec& v)
{
    for (int x : v)
        if (x != 0) return false;
    return true;
}

std::vector<int> rref(Matrix& m)
{
    const int p = m.prime();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        int s = inv(m(r, c), p);
        for (int j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * s % p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            int f = m(i, c);
            for (int j = 0; j < m.cols(); ++j) m(i, j) = mod(m(i, j) - f * m(r, j), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Matrix m)
{
    return static_cast<int>(rref(m).size());
}

Matrix right_nullspace(const Matrix& a)
{
    const int p = a.prime();
    Matrix m(a);
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    Matrix basis(0, a.cols(), p);
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec x(a.cols(), 0);
        x[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = mod(-m(static_cast<int>(r), free), p);
        basis.append_row(x);
    }
    return basis;
}

Matrix left_nullspace(const Matrix& a)
{
    return right_nullspace(a.transpose());
}

Matrix inverse(const Matrix& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("gf::inverse: not square");
    const int n = a.rows();
    Matrix aug(n, 2 * n, a.prime());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("gf::inverse: singular matrix");
    Matrix r(n, n, a.prime());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

bool solve_left(const Matrix& a, const Vec& b, Vec& x)
{
    // x * A = b  <=>  A^T x^T = b^T
    const int p = a.prime();
    const int n = a.rows();
    Matrix aug(a.cols(), n + 1, p);
    for (int i = 0; i < a.cols(); ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(j, i);
        aug(i, n) = mod(b[i], p);
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == n) return false;
    x.assign(n, 0);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), n);
    return true;
}

Subspace::Subspace(int ambient, int p) : ambient_(ambient), p_(p), basis_(0, ambient, p) {}

Subspace Subspace::span(const std::vector<Vec>& vecs, int ambient, int p)
{
    Subspace s(ambient, p);
    if (vecs.empty()) return s;
    Matrix m = Matrix::from_rows(vecs, ambient, p);
    auto piv = rref(m);
    Matrix b(static_cast<int>(piv.size()), ambient, p);
    for (size_t i = 0; i < piv.size(); ++i) b.set_row(static_cast<int>(i), m.row(static_cast<int>(i)));
    s.basis_ = b;
    return s;
}

Subspace Subspace::full(int ambient, int p)
{
    Subspace s(ambient, p);
    s.basis_ = Matrix::identity(ambient, p);
    return s;
}

std::vector<Vec> Subspace::vectors() const
{
    std::vector<Vec> out;
    for (int i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
}

bool Subspace::contains(const Vec& v) const
{
    auto vs = vectors();
    vs.push_back(v);
    return span(vs, ambient_, p_).dim() == dim();
}

bool Subspace::contains(const Subspace& o) const
{
    auto vs = vectors();
    for (auto& v : o.vectors()) vs.push_back(v);
    return span(vs, ambient_, p_).dim() == dim();
}

Subspace Subspace::operator+(const Subspace& o) const
{
    auto vs = vectors();
    for (auto& v : o.vectors()) vs.push_back(v);
    return span(vs, ambient_, p_);
}

Subspace Subspace::intersect(const Subspace& o) const
{
    // Solve a*A = b*B; the intersection is spanned by a*A.
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_, p_);
    Matrix stacked(dim() + o.dim(), ambient_, p_);
    for (int i = 0; i < dim(); ++i) stacked.set_row(i, basis_.row(i));
    for (int i = 0; i < o.dim(); ++i) stacked.set_row(dim() + i, vec_scale(o.basis_.row(i), -1, p_));
    Matrix ker = left_nullspace(stacked);
    std::vector<Vec> vs;
    for (int r = 0; r < ker.rows(); ++r) {
        Vec row = ker.row(r);
        Vec coeff(row.begin(), row.begin() + dim());
        vs.push_back(vec_mul(coeff, basis_));
    }
    return span(vs, ambient_, p_);
}

Subspace Subspace::image(const Matrix& m) const
{
    std::vector<Vec> vs;
    for (int i = 0; i < dim(); ++i) vs.push_back(vec_mul(basis_.row(i), m));
    return span(vs, m.cols(), p_);
}

Poly poly_trim(Poly a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int poly_degree(const Poly& a)
{
    return static_cast<int>(poly_trim(a).size()) - 1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_trim(r);
}

Poly poly_sub(const Poly& a, const Poly& b, int p)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], p);
    return poly_trim(r);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, int p)
{
    Poly bb = poly_trim(b);
    if (bb.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    Poly r = poly_trim(a);
    const int db = static_cast<int>(bb.size()) - 1;
    const int lead_inv = inv(bb.back(), p);
    Poly q(std::max<int>(0, static_cast<int>(r.size()) - db), 0);
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        int shift = static_cast<int>(r.size()) - 1 - db;
        int c = r.back() * lead_inv % p;
        q[shift] = c;
        for (int i = 0; i <= db; ++i) r[shift + i] = mod(r[shift + i] - c * bb[i], p);
        r = poly_trim(r);
    }
    return {poly_trim(q), r};
}

static Poly make_monic(Poly a, int p)
{
    a = poly_trim(a);
    if (a.empty()) return a;
    int c = inv(a.back(), p);
    for (auto& x : a) x = x * c % p;
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p)
{
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b, p);
        a = b;
        b = r;
    }
    return make_monic(a, p);
}

Poly poly_xgcd(const Poly& a, const Poly& b, int p, Poly& s, Poly& t)
{
    Poly r0 = poly_trim(a), r1 = poly_trim(b);
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1, p);
        Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        Poly t2 = poly_sub(t0, poly_mul(q, t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    int c = inv(r0.back(), p);
    s = poly_trim(vec_scale(s0, c, p));
    t = poly_trim(vec_scale(t0, c, p));
    return make_monic(r0, p);
}

std::vector<std::pair<Poly, int>> poly_factor(const Poly& f, int p)
{
    Poly rest = make_monic(f, p);
    std::vector<std::pair<Poly, int>> out;
    // Trial division by monic polynomials of increasing degree; the first
    // divisor found at each degree is necessarily irreducible.
    for (int d = 1; poly_degree(rest) >= 1 && 2 * d <= poly_degree(rest) + 1; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count && poly_degree(rest) >= d; ++idx) {
            Poly cand(d + 1, 0);
            long long k = idx;
            for (int i = 0; i < d; ++i) {
                cand[i] = static_cast<int>(k % p);
                k /= p;
            }
            cand[d] = 1;
            int mult = 0;
            while (poly_degree(rest) >= d) {
                auto [q, r] = poly_divmod(rest, cand, p);
                if (!r.empty()) break;
                rest = q;
                ++mult;
            }
            if (mult > 0) out.emplace_back(cand, mult);
        }
    }
    if (poly_degree(rest) >= 1) out.emplace_back(rest, 1);
    return out;
}

std::string to_string(const Vec& v)
{
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace filterlab::gf
