#include "filterlab/pcgroup.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace filterlab {

ParseError::ParseError(int line, const std::string& msg)
    : Error("line " + std::to_string(line) + ": " + msg), line_(line)
{
}

bool GroupElem::is_identity() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int GroupElem::depth() const
{
    for (int i = 0; i < size(); ++i)
        if (exps_[i] != 0) return i;
    return size();
}

std::string to_string(const GroupElem& x)
{
    std::string s = "(";
    for (int i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

bool is_prime(int p)
{
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PcGroup::PcGroup(int p, int n, const std::vector<Word>& powers,
                 const std::vector<std::pair<std::pair<int, int>, Word>>& comms)
    : p_(p), n_(n)
{
    if (!is_prime(p)) throw Error("pc presentation: " + std::to_string(p) + " is not prime");
    if (n < 0) throw Error("pc presentation: negative generator count");
    if (static_cast<int>(powers.size()) > n) throw Error("pc presentation: too many power relations");

    std::vector<Word> pw(n);
    for (size_t i = 0; i < powers.size(); ++i) pw[i] = powers[i];
    std::vector<std::vector<Word>> cw(n, std::vector<Word>(n));
    for (const auto& [ji, w] : comms) {
        auto [j, i] = ji;
        if (j <= i || i < 0 || j >= n) throw Error("pc presentation: commutator relation must be [g_j, g_i] with j > i");
        cw[j][i] = w;
    }
    for (int i = 0; i < n; ++i)
        for (auto [g, e] : pw[i])
            if (g <= i || g >= n)
                throw Error("pc presentation: power relation of g" + std::to_string(i + 1) + " uses g" + std::to_string(g + 1));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            for (auto [g, e] : cw[j][i])
                if (g <= j || g >= n)
                    throw Error("pc presentation: commutator [g" + std::to_string(j + 1) + ",g" + std::to_string(i + 1) +
                                "] uses g" + std::to_string(g + 1));

    power_.assign(n, identity());
    comm_.assign(n, std::vector<GroupElem>(n, identity()));
    conj_.assign(n, std::vector<GroupElem>(n, identity()));
    // Normalize relation words from the bottom of the pc series up: the
    // collector restricted to generators >= m only needs relations among them.
    for (int m = n - 1; m >= 0; --m) {
        power_[m] = collect(pw[m]);
        for (int j = m + 1; j < n; ++j) {
            comm_[j][m] = collect(cw[j][m]);
            GroupElem gj = generator(j);
            std::vector<int> c = gj.exponents();
            mul_elem(c, comm_[j][m].exponents());
            conj_[j][m] = GroupElem(c);
        }
    }
}

long long PcGroup::order() const
{
    long long o = 1;
    for (int i = 0; i < n_; ++i) {
        if (o > (1LL << 62) / p_) throw Error("group order overflows");
        o *= p_;
    }
    return o;
}

GroupElem PcGroup::identity() const
{
    return GroupElem(std::vector<int>(n_, 0));
}

GroupElem PcGroup::generator(int k) const
{
    if (k < 0 || k >= n_) throw Error("generator index out of range");
    auto v = std::vector<int>(n_, 0);
    v[k] = 1;
    return GroupElem(v);
}

void PcGroup::check_parent(const GroupElem& x) const
{
    if (x.size() != n_) throw Error("element does not belong to this group (length mismatch)");
}

// x <- x * g_k, collecting from the left.
void PcGroup::mul_gen(std::vector<int>& x, int k) const
{
    // Move g_k left past the tail g_{k+1}^{a_{k+1}} ... g_n^{a_n}:
    // T g_k = g_k T^{g_k}, and (g_j)^{g_k} = g_j [g_j, g_k].
    thread_local std::vector<std::vector<std::pair<int, int>>> tails;
    const size_t level = tails.size();
    tails.emplace_back();
    for (int j = k + 1; j < n_; ++j)
        if (x[j] != 0) {
            tails[level].emplace_back(j, x[j]);
            x[j] = 0;
        }
    if (++x[k] == p_) {
        x[k] = 0;
        mul_elem(x, power_[k].exponents());
    }
    auto tail = std::move(tails[level]);
    tails.pop_back();
    for (auto [j, a] : tail)
        for (int r = 0; r < a; ++r) mul_elem(x, conj_[j][k].exponents());
}

void PcGroup::mul_elem(std::vector<int>& x, const std::vector<int>& y) const
{
    for (int k = 0; k < n_; ++k)
        for (int r = 0; r < y[k]; ++r) mul_gen(x, k);
}

GroupElem PcGroup::collect(const Word& w) const
{
    std::vector<int> x(n_, 0);
    for (auto [g, e] : w) {
        if (g < 0 || g >= n_) throw Error("collect: generator index out of range");
        if (e >= 0) {
            for (int r = 0; r < e; ++r) mul_gen(x, g);
        } else {
            GroupElem gi = inverse(generator(g));
            for (int r = 0; r < -e; ++r) mul_elem(x, gi.exponents());
        }
    }
    return GroupElem(x);
}

GroupElem PcGroup::multiply(const GroupElem& x, const GroupElem& y) const
{
    check_parent(x);
    check_parent(y);
    std::vector<int> r = x.exponents();
    mul_elem(r, y.exponents());
    return GroupElem(r);
}

GroupElem PcGroup::inverse(const GroupElem& x) const
{
    check_parent(x);
    std::vector<int> z = x.exponents();
    std::vector<int> y(n_, 0);
    for (int k = 0; k < n_; ++k) {
        int t = (p_ - z[k]) % p_;
        for (int r = 0; r < t; ++r) mul_gen(z, k);
        y[k] = t;
    }
    return GroupElem(y);
}

GroupElem PcGroup::power(const GroupElem& x, long long e) const
{
    GroupElem base = e < 0 ? inverse(x) : x;
    if (e < 0) e = -e;
    GroupElem r = identity();
    while (e > 0) {
        if (e & 1) r = multiply(r, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return r;
}

GroupElem PcGroup::commutator(const GroupElem& x, const GroupElem& y) const
{
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

GroupElem PcGroup::conjugate(const GroupElem& x, const GroupElem& y) const
{
    return multiply(multiply(inverse(y), x), y);
}

int PcGroup::element_order(const GroupElem& x) const
{
    int o = 1;
    GroupElem y = x;
    while (!y.is_identity()) {
        y = power(y, p_);
        o *= p_;
    }
    return o;
}

std::vector<std::string> PcGroup::overlap_failures() const
{
    std::vector<std::string> out;
    auto g = [&](int i) { return generator(i); };
    auto gp = [&](int i, int e) { return power(generator(i), e); };
    auto check = [&](const GroupElem& a, const GroupElem& b, const std::string& what) {
        if (a != b) out.push_back(what + ": " + to_string(a) + " != " + to_string(b));
    };
    auto name = [](int i) { return "g" + std::to_string(i + 1); };
    for (int k = 0; k < n_; ++k)
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < j; ++i)
                check(multiply(multiply(g(k), g(j)), g(i)), multiply(g(k), multiply(g(j), g(i))),
                      "(" + name(k) + name(j) + ")" + name(i));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < j; ++i) {
            check(multiply(gp(j, p_), g(i)), multiply(gp(j, p_ - 1), multiply(g(j), g(i))),
                  name(j) + "^p " + name(i));
            check(multiply(g(j), gp(i, p_)), multiply(multiply(g(j), g(i)), gp(i, p_ - 1)),
                  name(j) + " " + name(i) + "^p");
        }
    for (int i = 0; i < n_; ++i)
        check(multiply(gp(i, p_), g(i)), multiply(g(i), gp(i, p_)), name(i) + "^(p+1)");
    return out;
}

std::vector<GroupElem> PcGroup::elements() const
{
    long long N = order();
    if (N > (1LL << 24)) throw Error("group too large to enumerate");
    std::vector<GroupElem> out;
    out.reserve(static_cast<size_t>(N));
    for (long long i = 0; i < N; ++i) out.push_back(element_at(i));
    return out;
}

long long PcGroup::index_of(const GroupElem& x) const
{
    long long idx = 0;
    for (int i = 0; i < n_; ++i) idx = idx * p_ + x[i];
    return idx;
}

GroupElem PcGroup::element_at(long long index) const
{
    std::vector<int> v(n_, 0);
    for (int i = n_ - 1; i >= 0; --i) {
        v[i] = static_cast<int>(index % p_);
        index /= p_;
    }
    return GroupElem(v);
}

Subgroup PcGroup::whole() const
{
    std::vector<GroupElem> gens;
    for (int i = 0; i < n_; ++i) gens.push_back(generator(i));
    return subgroup_from_gens(*this, gens);
}

Subgroup PcGroup::trivial() const
{
    return subgroup_from_gens(*this, {});
}

// ---------------------------------------------------------------------------
// Subgroups

std::vector<int> Subgroup::depths() const
{
    std::vector<int> d;
    for (const auto& g : gens_) d.push_back(g.depth());
    return d;
}

namespace {

struct SiftTable {
    const PcGroup& G;
    std::vector<GroupElem> slot;  // identity when empty
    std::vector<bool> used;

    explicit SiftTable(const PcGroup& g) : G(g), slot(g.rank(), g.identity()), used(g.rank(), false) {}

    GroupElem sift(GroupElem x) const
    {
        const int p = G.prime();
        while (!x.is_identity()) {
            int d = x.depth();
            if (!used[d]) return x;
            x = G.multiply(x, G.power(slot[d], (p - x[d]) % p));
        }
        return x;
    }
};

int inv_mod(int a, int p)
{
    for (int b = 1; b < p; ++b)
        if (a * b % p == 1) return b;
    throw Error("no inverse mod p");
}

}  // namespace

Subgroup subgroup_from_gens(const PcGroup& G, const std::vector<GroupElem>& gens)
{
    SiftTable t(G);
    const int p = G.prime();
    std::vector<GroupElem> queue;
    for (const auto& g : gens) {
        G.check_parent(g);
        queue.push_back(g);
    }
    while (!queue.empty()) {
        GroupElem x = t.sift(queue.back());
        queue.pop_back();
        if (x.is_identity()) continue;
        int d = x.depth();
        x = G.power(x, inv_mod(x[d], p));
        t.slot[d] = x;
        t.used[d] = true;
        queue.push_back(G.power(x, p));
        for (int e = 0; e < G.rank(); ++e)
            if (t.used[e] && e != d) queue.push_back(G.commutator(x, t.slot[e]));
    }
    // Canonical form: clear every other leading depth, in increasing order.
    Subgroup H;
    for (int j = 0; j < G.rank(); ++j) {
        if (!t.used[j]) continue;
        GroupElem x = t.slot[j];
        for (int d = j + 1; d < G.rank(); ++d)
            if (t.used[d] && x[d] != 0) x = G.multiply(x, G.power(t.slot[d], (p - x[d]) % p));
        H.gens_.push_back(x);
    }
    return H;
}

long long subgroup_order(const PcGroup& G, const Subgroup& H)
{
    long long o = 1;
    for (int i = 0; i < H.length(); ++i) o *= G.prime();
    return o;
}

bool membership(const PcGroup& G, const GroupElem& x, const Subgroup& H)
{
    G.check_parent(x);
    const int p = G.prime();
    GroupElem y = x;
    size_t k = 0;
    const auto& gens = H.gens();
    while (!y.is_identity()) {
        int d = y.depth();
        while (k < gens.size() && gens[k].depth() < d) ++k;
        if (k == gens.size() || gens[k].depth() != d) return false;
        y = G.multiply(y, G.power(gens[k], (p - y[d]) % p));
    }
    return true;
}

Subgroup join(const PcGroup& G, const Subgroup& H, const Subgroup& K)
{
    if (is_subset(G, K, H)) return H;
    if (is_subset(G, H, K)) return K;
    auto gens = H.gens();
    gens.insert(gens.end(), K.gens().begin(), K.gens().end());
    return subgroup_from_gens(G, gens);
}

bool is_subset(const PcGroup& G, const Subgroup& H, const Subgroup& K)
{
    if (H.length() > K.length()) return false;
    for (const auto& h : H.gens())
        if (!membership(G, h, K)) return false;
    return true;
}

bool is_normal(const PcGroup& G, const Subgroup& H)
{
    for (const auto& h : H.gens())
        for (int k = 0; k < G.rank(); ++k)
            if (!membership(G, G.conjugate(h, G.generator(k)), H)) return false;
    return true;
}

static Subgroup close_under_conjugation(const PcGroup& G, Subgroup C, const std::vector<GroupElem>& by)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : C.gens()) {
            for (const auto& g : by) {
                GroupElem x = G.conjugate(c, g);
                if (!membership(G, x, C)) {
                    auto gens = C.gens();
                    gens.push_back(x);
                    C = subgroup_from_gens(G, gens);
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    return C;
}

Subgroup normal_closure(const PcGroup& G, const Subgroup& H)
{
    std::vector<GroupElem> by;
    for (int k = 0; k < G.rank(); ++k) by.push_back(G.generator(k));
    return close_under_conjugation(G, H, by);
}

std::vector<GroupElem> subgroup_elements(const PcGroup& G, const Subgroup& H)
{
    std::vector<GroupElem> out{G.identity()};
    // Elements are products c_1^{e_1} ... c_k^{e_k} in depth order.
    for (auto it = H.gens().rbegin(); it != H.gens().rend(); ++it) {
        std::vector<GroupElem> next;
        next.reserve(out.size() * G.prime());
        GroupElem pw = G.identity();
        for (int e = 0; e < G.prime(); ++e) {
            for (const auto& y : out) next.push_back(G.multiply(pw, y));
            pw = G.multiply(pw, *it);
        }
        out = std::move(next);
    }
    return out;
}

Subgroup intersect(const PcGroup& G, const Subgroup& H, const Subgroup& K)
{
    if (is_subset(G, H, K)) return H;
    if (is_subset(G, K, H)) return K;
    const Subgroup& small = H.length() <= K.length() ? H : K;
    const Subgroup& other = H.length() <= K.length() ? K : H;
    Subgroup result = G.trivial();
    for (const auto& x : subgroup_elements(G, small)) {
        if (membership(G, x, result) || !membership(G, x, other)) continue;
        auto gens = result.gens();
        gens.push_back(x);
        result = subgroup_from_gens(G, gens);
    }
    return result;
}

Subgroup comm_subgroup(const PcGroup& G, const Subgroup& H, const Subgroup& K)
{
    std::vector<GroupElem> gens;
    for (const auto& h : H.gens())
        for (const auto& k : K.gens()) gens.push_back(G.commutator(h, k));
    Subgroup C = subgroup_from_gens(G, gens);
    if (C.is_trivial()) return C;
    std::vector<GroupElem> by = H.gens();
    by.insert(by.end(), K.gens().begin(), K.gens().end());
    return close_under_conjugation(G, C, by);
}

Subgroup centralizer_mod(const PcGroup& G, const Subgroup& H, const Subgroup& N)
{
    if (!is_normal(G, N)) throw Error("centralizer_mod: N is not normal");
    // {x : [x, h] in N for all h in H} is a subgroup; generators of H suffice.
    Subgroup K = N;
    for (const auto& x : G.elements()) {
        if (membership(G, x, K)) continue;
        bool ok = true;
        for (const auto& h : H.gens())
            if (!membership(G, G.commutator(x, h), N)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        auto gens = K.gens();
        gens.push_back(x);
        K = subgroup_from_gens(G, gens);
    }
    return K;
}

Subgroup power_subgroup(const PcGroup& G, const Subgroup& H)
{
    std::vector<GroupElem> gens;
    for (const auto& h : H.gens()) gens.push_back(G.power(h, G.prime()));
    return subgroup_from_gens(G, gens);
}

// ---------------------------------------------------------------------------
// .pcg format

namespace {

std::string strip_comment(const std::string& s)
{
    auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

std::vector<std::string> tokenize(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& s, int line, const std::string& what)
{
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer for " + what + ", got '" + s + "'");
    }
}

}  // namespace

Word parse_word(const std::string& text, int n, int line)
{
    Word w;
    for (const auto& tok : tokenize(text)) {
        if (tok.size() < 2 || tok[0] != 'g') throw ParseError(line, "bad word token '" + tok + "'");
        auto caret = tok.find('^');
        int idx = parse_int(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), line, "generator");
        int e = caret == std::string::npos ? 1 : parse_int(tok.substr(caret + 1), line, "exponent");
        if (idx < 1 || idx > n) throw ParseError(line, "generator g" + std::to_string(idx) + " out of range");
        w.emplace_back(idx - 1, e);
    }
    return w;
}

PcGroup parse_pcgroup(const std::string& text, bool check_overlaps)
{
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int p = -1, n = -1;
    std::vector<Word> powers;
    std::vector<std::pair<std::pair<int, int>, Word>> comms;
    std::vector<bool> seen_pow;
    std::vector<std::vector<bool>> seen_comm;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0].rfind("aut:", 0) == 0) continue;
        if (p < 0) {
            if (toks.size() != 2 || toks[0] != "p") throw ParseError(lineno, "expected 'p <prime>'");
            p = parse_int(toks[1], lineno, "p");
            if (!is_prime(p)) throw ParseError(lineno, std::to_string(p) + " is not prime");
            continue;
        }
        if (n < 0) {
            if (toks.size() != 2 || toks[0] != "n") throw ParseError(lineno, "expected 'n <count>'");
            n = parse_int(toks[1], lineno, "n");
            if (n < 0) throw ParseError(lineno, "negative generator count");
            powers.assign(n, {});
            seen_pow.assign(n, false);
            seen_comm.assign(n, std::vector<bool>(n, false));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected '='");
        auto lhs = tokenize(line.substr(0, eq));
        Word w = parse_word(line.substr(eq + 1), n, lineno);
        if (lhs.size() == 2 && lhs[0] == "pow") {
            int i = parse_int(lhs[1], lineno, "pow index");
            if (i < 1 || i > n) throw ParseError(lineno, "pow index out of range");
            if (seen_pow[i - 1]) throw ParseError(lineno, "duplicate pow relation");
            for (auto [g, e] : w)
                if (g <= i - 1) throw ParseError(lineno, "pow " + std::to_string(i) + " uses g" + std::to_string(g + 1) + " (not polycyclic)");
            seen_pow[i - 1] = true;
            powers[i - 1] = w;
        } else if (lhs.size() == 3 && lhs[0] == "comm") {
            int j = parse_int(lhs[1], lineno, "comm index");
            int i = parse_int(lhs[2], lineno, "comm index");
            if (i < 1 || j > n) throw ParseError(lineno, "comm index out of range");
            if (j <= i) throw ParseError(lineno, "comm relation needs j > i (got comm " + std::to_string(j) + " " + std::to_string(i) + ")");
            if (seen_comm[j - 1][i - 1]) throw ParseError(lineno, "duplicate comm relation");
            for (auto [g, e] : w)
                if (g <= j - 1)
                    throw ParseError(lineno, "comm " + std::to_string(j) + " " + std::to_string(i) + " uses g" + std::to_string(g + 1) + " (not polycyclic)");
            seen_comm[j - 1][i - 1] = true;
            comms.push_back({{j - 1, i - 1}, w});
        } else {
            throw ParseError(lineno, "unrecognized relation '" + line + "'");
        }
    }
    if (p < 0 || n < 0) throw ParseError(lineno, "missing 'p' or 'n' header");
    PcGroup G(p, n, powers, comms);
    if (!check_overlaps) return G;
    auto failures = G.overlap_failures();
    if (!failures.empty()) throw Error("inconsistent presentation: overlap " + failures.front());
    return G;
}

PcGroup load_pcgroup(const std::string& path, bool check_overlaps)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_pcgroup(ss.str(), check_overlaps);
}

static std::string format_word(const GroupElem& x)
{
    std::string s;
    for (int k = 0; k < x.size(); ++k) {
        if (x[k] == 0) continue;
        if (!s.empty()) s += " ";
        s += "g" + std::to_string(k + 1);
        if (x[k] != 1) s += "^" + std::to_string(x[k]);
    }
    return s;
}

std::string format_pcgroup(const PcGroup& G)
{
    std::string s = "p " + std::to_string(G.prime()) + "\nn " + std::to_string(G.rank()) + "\n";
    for (int i = 0; i < G.rank(); ++i)
        if (!G.power_relation(i).is_identity()) s += "pow " + std::to_string(i + 1) + " = " + format_word(G.power_relation(i)) + "\n";
    for (int j = 0; j < G.rank(); ++j)
        for (int i = 0; i < j; ++i)
            if (!G.commutator_relation(j, i).is_identity())
                s += "comm " + std::to_string(j + 1) + " " + std::to_string(i + 1) + " = " + format_word(G.commutator_relation(j, i)) + "\n";
    return s;
}

// ---------------------------------------------------------------------------
// Direct products

GroupElem DirectProduct::embed(int factor, const GroupElem& x) const
{
    factors.at(factor).check_parent(x);
    std::vector<int> v(group.rank(), 0);
    for (int k = 0; k < x.size(); ++k) v[offsets[factor] + k] = x[k];
    return GroupElem(v);
}

Subgroup DirectProduct::embed(int factor, const Subgroup& H) const
{
    std::vector<GroupElem> gens;
    for (const auto& h : H.gens()) gens.push_back(embed(factor, h));
    return subgroup_from_gens(group, gens);
}

static Word to_word(const GroupElem& x, int offset)
{
    Word w;
    for (int k = 0; k < x.size(); ++k)
        if (x[k] != 0) w.emplace_back(offset + k, x[k]);
    return w;
}

DirectProduct direct_product(const std::vector<PcGroup>& parts)
{
    if (parts.empty()) throw Error("direct_product: no factors");
    const int p = parts.front().prime();
    DirectProduct dp;
    dp.factors = parts;
    int total = 0;
    for (const auto& G : parts) {
        if (G.prime() != p) throw Error("direct_product: factors have different primes");
        dp.offsets.push_back(total);
        total += G.rank();
    }
    std::vector<Word> powers(total);
    std::vector<std::pair<std::pair<int, int>, Word>> comms;
    for (size_t f = 0; f < parts.size(); ++f) {
        const auto& G = parts[f];
        const int off = dp.offsets[f];
        for (int i = 0; i < G.rank(); ++i) powers[off + i] = to_word(G.power_relation(i), off);
        for (int j = 0; j < G.rank(); ++j)
            for (int i = 0; i < j; ++i)
                if (!G.commutator_relation(j, i).is_identity())
                    comms.push_back({{off + j, off + i}, to_word(G.commutator_relation(j, i), off)});
    }
    dp.group = PcGroup(p, total, powers, comms);
    return dp;
}

DirectProduct direct_product(const PcGroup& G1, const PcGroup& G2)
{
    return direct_product(std::vector<PcGroup>{G1, G2});
}

}  // namespace filterlab
