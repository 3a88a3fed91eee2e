#pragma once

// The five scalar rings of a bimap U x V -> W, as solution spaces of linear
// systems over GF(p), with radicals and idempotents.
//
// Maps act on the right. Each ring element is stored through a faithful
// block-diagonal matrix representation:
//   Der, Cent  diag(F, G, H)   on U + V + W
//   Left       diag(F, H)      on U + W
//   Mid        diag(F, G^T)    on U + V   ((uF) o v = u o (vG) reverses G)
//   Right      diag(G, H)      on V + W

#include <optional>
#include <string>
#include <vector>

#include "filterlab/bimap.hpp"

namespace filterlab {

enum class RingKind { Der, Left, Mid, Right, Cent };
std::string to_string(RingKind k);

enum class Side { U, V, W };
std::string to_string(Side s);

/// A subspace of matrices n x n, closed under whatever operation the caller
/// needs; `basis` is linearly independent.
struct MatAlgebra {
    int n = 0;
    int p = 2;
    std::vector<gf::Matrix> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    /// Coordinates of m in the basis, if m lies in the span.
    std::optional<gf::Vec> coords(const gf::Matrix& m) const;
    bool contains(const gf::Matrix& m) const { return coords(m).has_value(); }
    gf::Matrix combine(const gf::Vec& c) const;
};

/// Associative closure of span(gens) together with the identity.
MatAlgebra enveloping_algebra(const std::vector<gf::Matrix>& gens, int n, int p);
MatAlgebra center(const MatAlgebra& A);

/// Largest p^k a brute-force composition series may enumerate.
inline constexpr long long radical_point_cap = 1LL << 20;

/// Composition series 0 < W_1 < ... < V of the natural module F^n.
/// Empty optional when the search would exceed the cap.
std::optional<std::vector<gf::Subspace>> composition_series(const MatAlgebra& A);
/// Jacobson radical: the elements acting as zero on every composition
/// factor. Empty optional when the cap is exceeded.
std::optional<MatAlgebra> radical(const MatAlgebra& A);

struct ScalarAlgebra {
    RingKind kind = RingKind::Der;
    int dU = 0, dV = 0, dW = 0;
    int p = 2;
    std::vector<Side> sides;      // one per diagonal block
    std::vector<int> offsets;     // block offsets in the representation
    bool transposed_v = false;    // Mid stores G^T
    MatAlgebra alg;

    int dim() const { return alg.dim(); }
    int side_dim(Side s) const;
    bool acts_on(Side s) const;
    /// The map on one side (always acting on the right), from a
    /// representation matrix.
    gf::Matrix side_map(const gf::Matrix& rep, Side s) const;
    gf::Matrix identity() const { return gf::Matrix::identity(alg.n, p); }
};

ScalarAlgebra derivation_algebra(const Bimap& b);
/// kind must be Left, Mid or Right.
ScalarAlgebra scalar_ring(const Bimap& b, RingKind kind);
ScalarAlgebra centroid(const Bimap& b);

/// Re-substitutes every basis element into its defining identity.
std::vector<std::string> check_defining_identity(const Bimap& b, const ScalarAlgebra& A);
/// Der: closed under the commutator; others: closed under products, unital;
/// Cent also commutative.
std::vector<std::string> check_closure(const ScalarAlgebra& A);

/// Complete set of primitive orthogonal idempotents of a commutative algebra
/// (lifted through the radical), summing to the identity.
std::vector<gf::Matrix> split_idempotents(const MatAlgebra& A);

/// Primitive central idempotents of A/rad(A), each returned as the preimage
/// ideal e A + rad(A). Empty optional when the radical is unavailable.
std::optional<std::vector<MatAlgebra>> central_ideals_mod_radical(const MatAlgebra& A, const MatAlgebra& rad);

struct Emission {
    Side side;
    gf::Subspace space;
    RingKind ring;
    std::string tag;  // e.g. "radical-image", "idempotent", "Radical"
};

struct RingSummary {
    int der = 0, left = 0, mid = 0, right = 0, cent = 0;
    int mid_radical = -1, cent_radical = -1;  // -1: not computed (cap)
    int cent_idempotents = 0;
};

struct ScalarAnalysis {
    RingSummary dims;
    std::vector<Emission> emissions;  // proper, Der-invariant, deduplicated
    /// Sources ("Der", "Mid", ..., "Radical") that produced at least one
    /// proper invariant subspace, before deduplication across sources.
    std::vector<std::string> sources;
};

std::string source_label(const Emission& e);

/// Computes all five rings and the characteristic subspaces they expose.
/// Bimap radicals are tagged "Radical" and attributed to Der, the ring whose
/// invariance they are checked against.
ScalarAnalysis characteristic_subspaces(const Bimap& b);

}  // namespace filterlab
