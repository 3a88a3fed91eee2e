#include "filterlab/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

namespace filterlab::oracle {

TableGroup cayley_from_pc(const PcGroup& G)
{
    const long long N = G.order();
    if (N > max_table_order) throw Error("oracle: group order " + std::to_string(N) + " exceeds the table cap");
    TableGroup T;
    T.order = static_cast<int>(N);
    T.labels = G.elements();
    T.table.resize(static_cast<size_t>(N) * N);
    for (int i = 0; i < T.order; ++i)
        for (int j = 0; j < T.order; ++j) {
            Word w;
            for (int k = 0; k < G.rank(); ++k) w.emplace_back(k, T.labels[i][k]);
            for (int k = 0; k < G.rank(); ++k) w.emplace_back(k, T.labels[j][k]);
            T.table[static_cast<size_t>(i) * N + j] = static_cast<int>(G.index_of(G.collect(w)));
        }
    T.identity = static_cast<int>(G.index_of(G.identity()));
    T.inverse.assign(T.order, -1);
    for (int i = 0; i < T.order; ++i)
        for (int j = 0; j < T.order; ++j)
            if (T.mul(i, j) == T.identity) {
                T.inverse[i] = j;
                break;
            }
    return T;
}

ElementSet generate(const TableGroup& T, const ElementSet& gens)
{
    std::vector<char> in(T.order, 0);
    ElementSet out{T.identity};
    in[T.identity] = 1;
    for (size_t k = 0; k < out.size(); ++k)
        for (int g : gens) {
            int y = T.mul(out[k], g);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

ElementSet commutator_set(const TableGroup& T, const ElementSet& A, const ElementSet& B)
{
    ElementSet gens;
    for (int a : A)
        for (int b : B) gens.push_back(T.comm(a, b));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return generate(T, gens);
}

ElementSet centralizer_mod(const TableGroup& T, const ElementSet& H, const ElementSet& N)
{
    ElementSet out;
    for (int x = 0; x < T.order; ++x) {
        bool ok = true;
        for (int h : H)
            if (!std::binary_search(N.begin(), N.end(), T.comm(x, h))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;
}

ElementSet as_set(const TableGroup& T, const PcGroup& G, const Subgroup& H)
{
    ElementSet out;
    for (const auto& x : subgroup_elements(G, H)) out.push_back(static_cast<int>(G.index_of(x)));
    std::sort(out.begin(), out.end());
    (void)T;
    return out;
}

BruteSeries brute_series(const TableGroup& T)
{
    BruteSeries s;
    ElementSet all(T.order);
    for (int i = 0; i < T.order; ++i) all[i] = i;
    s.lower.push_back(all);
    while (s.lower.back().size() > 1) {
        auto next = commutator_set(T, all, s.lower.back());
        if (next == s.lower.back()) break;  // not nilpotent; cannot happen for p-groups
        s.lower.push_back(next);
    }
    s.upper.push_back({T.identity});
    while (s.upper.back().size() < all.size()) {
        auto next = centralizer_mod(T, all, s.upper.back());
        if (next == s.upper.back()) break;
        s.upper.push_back(next);
    }
    return s;
}

namespace {

int eval_normal_form(const TableGroup& T, const std::vector<int>& gens, const GroupElem& x)
{
    int r = T.identity;
    for (int k = 0; k < x.size(); ++k)
        for (int e = 0; e < x[k]; ++e) r = T.mul(r, gens[k]);
    return r;
}

}  // namespace

std::vector<std::string> check_equiv(const PcGroup& G, const TableGroup& T, int max_reports)
{
    std::vector<std::string> out;
    auto report = [&](const std::string& s) {
        if (static_cast<int>(out.size()) < max_reports) out.push_back(s);
    };
    const int N = T.order;
    auto lbl = [&](int i) { return to_string(T.labels[i]); };

    // Associativity: exhaustive for small tables, a fixed sample otherwise.
    auto assoc = [&](int a, int b, int c) {
        if (T.mul(T.mul(a, b), c) != T.mul(a, T.mul(b, c)))
            report("product " + lbl(a) + "*" + lbl(b) + "*" + lbl(c) + " is not associative");
    };
    if (N <= 512) {
        for (int a = 0; a < N && out.empty(); ++a)
            for (int b = 0; b < N; ++b)
                for (int c = 0; c < N; ++c) assoc(a, b, c);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, N - 1);
        for (int r = 0; r < 200000 && out.empty(); ++r) assoc(pick(rng), pick(rng), pick(rng));
    }
    for (int a = 0; a < N; ++a) {
        if (T.mul(T.identity, a) != a || T.mul(a, T.identity) != a) report("identity law fails at " + lbl(a));
        if (T.inverse[a] < 0 || T.mul(T.inverse[a], a) != T.identity) report("no two-sided inverse for " + lbl(a));
    }
    if (!out.empty()) return out;

    // Normal forms are the words they name, and the generators satisfy the
    // defining relations. Together with |T| = p^n this pins T down as the
    // presented group.
    std::vector<int> gens;
    for (int k = 0; k < G.rank(); ++k) gens.push_back(static_cast<int>(G.index_of(G.generator(k))));
    for (int a = 0; a < N; ++a)
        if (eval_normal_form(T, gens, T.labels[a]) != a) report("normal form " + lbl(a) + " evaluates elsewhere");
    for (int i = 0; i < G.rank(); ++i) {
        int pw = T.identity;
        for (int e = 0; e < G.prime(); ++e) pw = T.mul(pw, gens[i]);
        if (pw != eval_normal_form(T, gens, G.power_relation(i)))
            report("power relation of g" + std::to_string(i + 1) + " fails in the table");
        for (int j = i + 1; j < G.rank(); ++j)
            if (T.comm(gens[j], gens[i]) != eval_normal_form(T, gens, G.commutator_relation(j, i)))
                report("commutator relation [g" + std::to_string(j + 1) + ",g" + std::to_string(i + 1) + "] fails in the table");
    }

    for (int a = 0; a < N; ++a) {
        const auto& x = T.labels[a];
        if (G.index_of(G.inverse(x)) != T.inverse[a]) report("inverse of " + lbl(a) + " disagrees");
        for (int b = 0; b < N; b += (N > 256 ? 7 : 1)) {
            const auto& y = T.labels[b];
            if (G.index_of(G.multiply(x, y)) != T.mul(a, b)) report("product " + lbl(a) + "*" + lbl(b) + " disagrees");
            if (G.index_of(G.commutator(x, y)) != T.comm(a, b)) report("commutator [" + lbl(a) + "," + lbl(b) + "] disagrees");
        }
    }

    // Subgroup algorithms against brute force.
    auto bs = brute_series(T);
    Subgroup gamma = G.whole();
    for (size_t i = 0; i < bs.lower.size(); ++i) {
        if (as_set(T, G, gamma) != bs.lower[i]) report("lower central term " + std::to_string(i + 1) + " disagrees");
        gamma = comm_subgroup(G, G.whole(), gamma);
    }
    if (!gamma.is_trivial()) report("lower central series does not reach 1");
    Subgroup zeta = G.trivial();
    for (size_t i = 0; i < bs.upper.size(); ++i) {
        if (as_set(T, G, zeta) != bs.upper[i]) report("upper central term " + std::to_string(i) + " disagrees");
        zeta = centralizer_mod(G, G.whole(), zeta);
    }
    return out;
}

}  // namespace filterlab::oracle

namespace filterlab::oracle {

std::string fingerprint(const PcGroup& G)
{
    auto T = cayley_from_pc(G);
    const int N = T.order;
    auto bs = brute_series(T);
    ElementSet all(N);
    for (int i = 0; i < N; ++i) all[i] = i;
    ElementSet pth;
    for (int x = 0; x < N; ++x) {
        int y = T.identity;
        for (int e = 0; e < G.prime(); ++e) y = T.mul(y, x);
        pth.push_back(y);
    }
    ElementSet gens = commutator_set(T, all, all);
    gens.insert(gens.end(), pth.begin(), pth.end());
    ElementSet frattini = generate(T, gens);
    const ElementSet& derived = bs.lower.size() > 1 ? bs.lower[1] : bs.lower[0];
    const ElementSet& center = bs.upper.size() > 1 ? bs.upper[1] : bs.upper[0];
    auto in = [](const ElementSet& s, int x) { return std::binary_search(s.begin(), s.end(), x) ? 1 : 0; };

    std::vector<std::array<int, 5>> local;
    for (int x = 0; x < N; ++x) {
        int o = 1;
        for (int y = x; y != T.identity; y = T.mul(y, x)) ++o;
        int cent = 0;
        for (int y = 0; y < N; ++y) cent += T.mul(x, y) == T.mul(y, x);
        local.push_back({o, cent, in(center, x), in(derived, x), in(frattini, x)});
    }
    std::sort(local.begin(), local.end());

    std::map<size_t, long long> pair_sizes;
    for (int x = 0; x < N; ++x)
        for (int y = x; y < N; ++y) ++pair_sizes[generate(T, {x, y}).size()];

    std::string s = "o" + std::to_string(N) + ";";
    for (const auto& t : bs.lower) s += std::to_string(t.size()) + ",";
    s += ";";
    for (const auto& t : bs.upper) s += std::to_string(t.size()) + ",";
    s += ";";
    for (const auto& a : local) s += std::to_string(a[0]) + "/" + std::to_string(a[1]) + "/" + std::to_string(a[2]) +
                                     std::to_string(a[3]) + std::to_string(a[4]) + " ";
    s += ";";
    for (auto [k, v] : pair_sizes) s += std::to_string(k) + ":" + std::to_string(v) + " ";
    return s;
}

}  // namespace filterlab::oracle
