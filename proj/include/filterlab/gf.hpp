#pragma once

// Dense linear algebra over the prime field GF(p).
//
// Vectors are rows; linear maps act on the right (v -> v * M), matching the
// right-action convention used for group elements and bimaps throughout.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace filterlab::gf {

using Vec = std::vector<int>;

int mod(long long a, int p);
int inv(int a, int p);

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, int p);

    static Matrix identity(int n, int p);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int prime() const { return p_; }

    int& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    int operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    void set_row(int i, const Vec& v);
    void append_row(const Vec& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(int c) const;
    Matrix transpose() const;
    bool is_zero() const;

    const std::vector<int>& data() const { return data_; }
    bool operator==(const Matrix& o) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int p_ = 2;
    std::vector<int> data_;
};

Vec vec_mul(const Vec& v, const Matrix& m);
Vec vec_add(const Vec& a, const Vec& b, int p);
Vec vec_scale(const Vec& a, int c, int p);
bool vec_is_zero(const Vec& v);

/// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);

/// Basis (as rows) of { x : x * A = 0 }, i.e. the left nullspace of A.
Matrix left_nullspace(const Matrix& a);
/// Basis (as rows) of { x : A * x^T = 0 }.
Matrix right_nullspace(const Matrix& a);

/// Inverse of a square matrix; throws if singular.
Matrix inverse(const Matrix& a);

/// Solve x * A = b for one x; returns false when inconsistent.
bool solve_left(const Matrix& a, const Vec& b, Vec& x);

/// A subspace of GF(p)^n held in canonical (reduced echelon) form, so equal
/// subspaces compare equal.
class Subspace {
public:
    Subspace() = default;
    Subspace(int ambient, int p);
    static Subspace span(const std::vector<Vec>& vecs, int ambient, int p);
    static Subspace full(int ambient, int p);

    int ambient() const { return ambient_; }
    int prime() const { return p_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vec> vectors() const;

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    Subspace operator+(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// Image of this subspace under v -> v*m.
    Subspace image(const Matrix& m) const;

    auto operator<=>(const Subspace& o) const {
        if (auto c = ambient_ <=> o.ambient_; c != 0) return c;
        if (auto c = dim() <=> o.dim(); c != 0) return c;
        return basis_.data() <=> o.basis_.data();
    }
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_.data() == o.basis_.data() && dim() == o.dim();
    }

private:
    int ambient_ = 0;
    int p_ = 2;
    Matrix basis_;
};

/// Polynomials over GF(p), coefficients low degree first, trimmed.
using Poly = std::vector<int>;

Poly poly_trim(Poly a);
int poly_degree(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b, int p);
Poly poly_sub(const Poly& a, const Poly& b, int p);
/// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, int p);
Poly poly_gcd(Poly a, Poly b, int p);
/// Extended gcd: s*a + t*b = g with g monic.
Poly poly_xgcd(const Poly& a, const Poly& b, int p, Poly& s, Poly& t);
/// Factor a monic polynomial into (irreducible, multiplicity) pairs.
std::vector<std::pair<Poly, int>> poly_factor(const Poly& f, int p);

std::string to_string(const Vec& v);

}  // namespace filterlab::gf
