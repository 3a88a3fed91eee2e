#include "filterlab/monoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace filterlab {

std::string to_string(OrderKind k)
{
    return k == OrderKind::pointwise ? "pointwise" : "lexicographic";
}

MonoidElem::MonoidElem(std::vector<int> coords) : coords_(std::move(coords))
{
    for (int c : coords_)
        if (c < 0) throw std::invalid_argument("MonoidElem: negative coordinate");
}

MonoidElem MonoidElem::zero(int dim)
{
    return MonoidElem(std::vector<int>(dim, 0));
}

MonoidElem MonoidElem::unit(int dim, int axis)
{
    std::vector<int> c(dim, 0);
    c.at(axis) = 1;
    return MonoidElem(std::move(c));
}

bool MonoidElem::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

MonoidElem MonoidElem::extended(int last) const
{
    auto c = coords_;
    c.push_back(last);
    return MonoidElem(std::move(c));
}

MonoidElem add(const MonoidElem& a, const MonoidElem& b)
{
    if (a.dim() != b.dim()) throw std::invalid_argument("monoid add: dimension mismatch");
    std::vector<int> c(a.dim());
    for (int i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
    return MonoidElem(std::move(c));
}

MonoidElem operator+(const MonoidElem& a, const MonoidElem& b)
{
    return add(a, b);
}

std::string to_string(const MonoidElem& m)
{
    std::string s = "(";
    for (int i = 0; i < m.dim(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

GradedMonoid::GradedMonoid(int dim, OrderKind kind) : dim_(dim), kind_(kind)
{
    if (dim <= 0) throw std::invalid_argument("GradedMonoid: dimension must be positive");
}

bool GradedMonoid::preceq(const MonoidElem& a, const MonoidElem& b) const
{
    if (a.dim() != dim_ || b.dim() != dim_) throw std::invalid_argument("preceq: dimension mismatch");
    if (kind_ == OrderKind::pointwise) {
        for (int i = 0; i < dim_; ++i)
            if (a[i] > b[i]) return false;
        return true;
    }
    return a.coords() <= b.coords();
}

bool GradedMonoid::precedes(const MonoidElem& a, const MonoidElem& b) const
{
    return a != b && preceq(a, b);
}

bool preceq(const MonoidElem& a, const MonoidElem& b, const GradedMonoid& m)
{
    return m.preceq(a, b);
}

std::vector<MonoidElem> box_enumerate(const MonoidElem& bound)
{
    std::vector<MonoidElem> out;
    const int d = bound.dim();
    std::vector<int> cur(d, 0);
    while (true) {
        out.emplace_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == bound[i]) {
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

bool in_box(const MonoidElem& m, const MonoidElem& bound)
{
    if (m.dim() != bound.dim()) throw std::invalid_argument("in_box: dimension mismatch");
    for (int i = 0; i < m.dim(); ++i)
        if (m[i] > bound[i]) return false;
    return true;
}

MonoidElem clamp(const MonoidElem& m, const MonoidElem& bound)
{
    std::vector<int> c(m.dim());
    for (int i = 0; i < m.dim(); ++i) c[i] = std::min(m[i], bound[i]);
    return MonoidElem(std::move(c));
}

}  // namespace filterlab
