#pragma once

// Pre-ordered commutative monoids N^d used as grading sets for filters and
// layerings.

#include <compare>
#include <string>
#include <vector>

namespace filterlab {

enum class OrderKind { pointwise, lexicographic };

std::string to_string(OrderKind k);

/// An element of N^d. Coordinates are non-negative.
class MonoidElem {
public:
    MonoidElem() = default;
    explicit MonoidElem(std::vector<int> coords);
    static MonoidElem zero(int dim);
    static MonoidElem unit(int dim, int axis);

    int dim() const { return static_cast<int>(coords_.size()); }
    int operator[](int i) const { return coords_[i]; }
    const std::vector<int>& coords() const { return coords_; }
    bool is_zero() const;

    /// Extends by one trailing coordinate.
    MonoidElem extended(int last) const;

    auto operator<=>(const MonoidElem&) const = default;

private:
    std::vector<int> coords_;
};

MonoidElem add(const MonoidElem& a, const MonoidElem& b);
MonoidElem operator+(const MonoidElem& a, const MonoidElem& b);
std::string to_string(const MonoidElem& m);

class GradedMonoid {
public:
    GradedMonoid() = default;
    GradedMonoid(int dim, OrderKind kind);

    int dim() const { return dim_; }
    OrderKind kind() const { return kind_; }

    /// a ⪯ b in the monoid's pre-order.
    bool preceq(const MonoidElem& a, const MonoidElem& b) const;
    /// a ⪯ b and a ≠ b.
    bool precedes(const MonoidElem& a, const MonoidElem& b) const;

    bool operator==(const GradedMonoid&) const = default;

private:
    int dim_ = 1;
    OrderKind kind_ = OrderKind::pointwise;
};

bool preceq(const MonoidElem& a, const MonoidElem& b, const GradedMonoid& m);

/// Every element pointwise below `bound`, in lexicographic order.
std::vector<MonoidElem> box_enumerate(const MonoidElem& bound);

/// True iff `m` is pointwise below `bound`.
bool in_box(const MonoidElem& m, const MonoidElem& bound);

/// Componentwise minimum with `bound`.
MonoidElem clamp(const MonoidElem& m, const MonoidElem& bound);

}  // namespace filterlab
