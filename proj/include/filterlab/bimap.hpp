#pragma once

#include <string>
#include <vector>

#include "filterlab/gf.hpp"

namespace filterlab {

/// Structure constants of a bilinear map U x V -> W over GF(p):
/// e_i o f_j = sum_k at(i, j, k) g_k.
struct Bimap {
    int dU = 0, dV = 0, dW = 0;
    int p = 2;
    std::vector<int> data;

    Bimap() = default;
    Bimap(int du, int dv, int dw, int prime) : dU(du), dV(dv), dW(dw), p(prime), data(static_cast<size_t>(du) * dv * dw, 0) {}

    int& at(int i, int j, int k) { return data[(static_cast<size_t>(i) * dV + j) * dW + k]; }
    int at(int i, int j, int k) const { return data[(static_cast<size_t>(i) * dV + j) * dW + k]; }

    gf::Vec apply(const gf::Vec& u, const gf::Vec& v) const;
    bool is_zero() const;
    bool operator==(const Bimap&) const = default;
};

/// Knuth-Liebler shuffle U x V -> W  to  U x W* -> V* with Q = GF(p):
/// out(i, k, j) = b(i, j, k).
Bimap shuffle(const Bimap& b);

/// Direct sum of two bimaps (block diagonal on each side).
Bimap direct_sum(const Bimap& a, const Bimap& b);

}  // namespace filterlab
