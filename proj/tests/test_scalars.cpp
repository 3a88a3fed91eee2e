#include "doctest.h"

#include "filterlab/scalars.hpp"

using namespace filterlab;

namespace {

Bimap symplectic(int p)
{
    Bimap b(2, 2, 1, p);
    b.at(0, 1, 0) = 1;
    b.at(1, 0, 0) = p - 1;
    return b;
}

void require_sound(const Bimap& b, const ScalarAlgebra& A)
{
    INFO(to_string(A.kind));
    CHECK(check_defining_identity(b, A).empty());
    CHECK(check_closure(A).empty());
}

}  // namespace

TEST_CASE("symplectic form over GF(3)")
{
    Bimap b = symplectic(3);
    auto der = derivation_algebra(b);
    auto mid = scalar_ring(b, RingKind::Mid);
    auto cent = centroid(b);
    CHECK(der.dim() == 5);
    CHECK(mid.dim() == 4);
    CHECK(cent.dim() == 1);
    CHECK(scalar_ring(b, RingKind::Left).dim() == 1);
    CHECK(scalar_ring(b, RingKind::Right).dim() == 1);
    for (const auto& A : {der, mid, cent, scalar_ring(b, RingKind::Left), scalar_ring(b, RingKind::Right)}) require_sound(b, A);
    auto rad = radical(mid.alg);
    REQUIRE(rad);
    CHECK(rad->dim() == 0);
    auto an = characteristic_subspaces(b);
    CHECK(an.emissions.empty());
}

TEST_CASE("zero bimap gives the unconstrained solution spaces")
{
    Bimap b(2, 3, 1, 2);
    CHECK(derivation_algebra(b).dim() == 4 + 9 + 1);
    CHECK(scalar_ring(b, RingKind::Left).dim() == 4 + 1);
    CHECK(scalar_ring(b, RingKind::Mid).dim() == 4 + 9);
    CHECK(scalar_ring(b, RingKind::Right).dim() == 9 + 1);
    // Every triple is a solution; the center of that is one scalar per side.
    CHECK(centroid(b).dim() == 3);
}

TEST_CASE("one-dimensional multiplication")
{
    Bimap b(1, 1, 1, 5);
    b.at(0, 0, 0) = 1;
    CHECK(derivation_algebra(b).dim() == 2);
    CHECK(scalar_ring(b, RingKind::Left).dim() == 1);
    CHECK(scalar_ring(b, RingKind::Mid).dim() == 1);
    CHECK(centroid(b).dim() == 1);
}

TEST_CASE("radical of upper triangular matrices")
{
    MatAlgebra A{2, 3, {}};
    gf::Matrix e11(2, 2, 3), e12(2, 2, 3), e22(2, 2, 3);
    e11(0, 0) = 1;
    e12(0, 1) = 1;
    e22(1, 1) = 1;
    A.basis = {e11, e12, e22};
    auto rad = radical(A);
    REQUIRE(rad);
    REQUIRE(rad->dim() == 1);
    CHECK(rad->basis[0] == e12);
    auto ideals = central_ideals_mod_radical(A, *rad);
    REQUIRE(ideals);
    CHECK(ideals->size() == 2);
}

TEST_CASE("composition series respects the cap")
{
    MatAlgebra A{21, 2, {gf::Matrix::identity(21, 2)}};
    CHECK_FALSE(composition_series(A).has_value());
}

TEST_CASE("direct sum splits the centroid")
{
    Bimap b = direct_sum(symplectic(3), symplectic(3));
    auto cent = centroid(b);
    require_sound(b, cent);
    CHECK(cent.dim() == 2);
    auto idem = split_idempotents(cent.alg);
    CHECK(idem.size() == 2);
    for (const auto& e : idem) CHECK(e * e == e);
    auto an = characteristic_subspaces(b);
    int cent_emits = 0;
    for (const auto& e : an.emissions)
        if (e.tag == "idempotent") ++cent_emits;
    // Derivations preserve each summand, so both idempotent images survive
    // on each of U, V and W (Mid reports the U and V ones first).
    CHECK(an.dims.cent_idempotents == 2);
    CHECK(cent_emits == 6);
}

TEST_CASE("a degenerate form exposes its radical")
{
    // u o v = u1 v1 on a 2-dimensional space: radical <e2> on both sides.
    Bimap b(2, 2, 1, 3);
    b.at(0, 0, 0) = 1;
    auto an = characteristic_subspaces(b);
    bool u = false, v = false;
    for (const auto& e : an.emissions) {
        if (e.side == Side::U && e.space == gf::Subspace::span({{0, 1}}, 2, 3)) u = true;
        if (e.side == Side::V && e.space == gf::Subspace::span({{0, 1}}, 2, 3)) v = true;
    }
    CHECK(u);
    CHECK(v);
    for (const auto& A : {derivation_algebra(b), scalar_ring(b, RingKind::Left), scalar_ring(b, RingKind::Mid),
                          scalar_ring(b, RingKind::Right), centroid(b)})
        require_sound(b, A);
}
