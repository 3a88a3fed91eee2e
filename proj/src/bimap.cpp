#include "filterlab/bimap.hpp"

#include <algorithm>

namespace filterlab {

gf::Vec Bimap::apply(const gf::Vec& u, const gf::Vec& v) const
{
    std::vector<long long> acc(dW, 0);
    for (int i = 0; i < dU; ++i) {
        if (!u[i]) continue;
        for (int j = 0; j < dV; ++j) {
            if (!v[j]) continue;
            long long c = static_cast<long long>(u[i]) * v[j] % p;
            for (int k = 0; k < dW; ++k) acc[k] += c * at(i, j, k);
        }
    }
    gf::Vec w(dW);
    for (int k = 0; k < dW; ++k) w[k] = static_cast<int>(acc[k] % p);
    return w;
}

bool Bimap::is_zero() const
{
    return std::all_of(data.begin(), data.end(), [](int x) { return x == 0; });
}

Bimap shuffle(const Bimap& b)
{
    Bimap s(b.dU, b.dW, b.dV, b.p);
    for (int i = 0; i < b.dU; ++i)
        for (int j = 0; j < b.dV; ++j)
            for (int k = 0; k < b.dW; ++k) s.at(i, k, j) = b.at(i, j, k);
    return s;
}

Bimap direct_sum(const Bimap& a, const Bimap& b)
{
    Bimap s(a.dU + b.dU, a.dV + b.dV, a.dW + b.dW, a.p);
    for (int i = 0; i < a.dU; ++i)
        for (int j = 0; j < a.dV; ++j)
            for (int k = 0; k < a.dW; ++k) s.at(i, j, k) = a.at(i, j, k);
    for (int i = 0; i < b.dU; ++i)
        for (int j = 0; j < b.dV; ++j)
            for (int k = 0; k < b.dW; ++k) s.at(a.dU + i, a.dV + j, a.dW + k) = b.at(i, j, k);
    return s;
}

}  // namespace filterlab
