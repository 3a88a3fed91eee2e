#include "filterlab/autfilter.hpp"

#include <fstream>
#include <sstream>

namespace filterlab {

namespace {

GroupElem eval_normal_form(const PcGroup& G, const std::vector<GroupElem>& images, const GroupElem& x)
{
    GroupElem r = G.identity();
    for (int k = 0; k < x.size(); ++k)
        if (x[k]) r = G.multiply(r, G.power(images[k], x[k]));
    return r;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> aut_failures(const PcGroup& G, const AutMap& a)
{
    const int n = G.rank();
    if (static_cast<int>(a.images.size()) != n) return {"expected " + std::to_string(n) + " images"};
    for (int k = 0; k < n; ++k) {
        if (a.images[k].size() != n) return {"image of g" + std::to_string(k + 1) + " has the wrong length"};
        for (int e : a.images[k].exponents())
            if (e < 0 || e >= G.prime()) return {"image of g" + std::to_string(k + 1) + " is not in normal form"};
    }
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        if (G.power(a.images[i], G.prime()) != eval_normal_form(G, a.images, G.power_relation(i)))
            out.push_back("power relation of g" + std::to_string(i + 1) + " not preserved");
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (G.commutator(a.images[j], a.images[i]) != eval_normal_form(G, a.images, G.commutator_relation(j, i)))
                out.push_back("commutator relation [g" + std::to_string(j + 1) + ", g" + std::to_string(i + 1) + "] not preserved");
    if (out.empty() && subgroup_from_gens(G, a.images).length() != n) out.push_back("images do not generate the group");
    return out;
}

AutMap make_aut(const PcGroup& G, std::vector<GroupElem> images)
{
    AutMap a{std::move(images)};
    auto f = aut_failures(G, a);
    if (!f.empty()) throw Error("invalid automorphism: " + f.front());
    return a;
}

AutMap identity_aut(const PcGroup& G)
{
    AutMap a;
    for (int k = 0; k < G.rank(); ++k) a.images.push_back(G.generator(k));
    return a;
}

AutMap inner_aut(const PcGroup& G, const GroupElem& g)
{
    AutMap a;
    for (int k = 0; k < G.rank(); ++k) a.images.push_back(G.conjugate(G.generator(k), g));
    return a;
}

std::vector<AutMap> parse_automorphisms(const PcGroup& G, const std::string& text)
{
    std::vector<AutMap> out;
    std::vector<GroupElem> images;
    bool open = false;
    int block_line = 0;
    auto close = [&]() {
        if (!open) return;
        AutMap a{images};
        auto f = aut_failures(G, a);
        if (!f.empty()) throw ParseError(block_line, "automorphism starting here is invalid: " + f.front());
        out.push_back(std::move(a));
        open = false;
    };
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (!line.empty() && line[0] == '#') continue;
        if (line.rfind("aut:", 0) != 0) {
            close();
            continue;
        }
        if (!open) {
            images.clear();
            for (int k = 0; k < G.rank(); ++k) images.push_back(G.generator(k));
            open = true;
            block_line = lineno;
        }
        std::string body = trim(line.substr(4));
        auto arrow = body.find("->");
        if (arrow == std::string::npos) throw ParseError(lineno, "expected 'aut: g<i> -> <word>'");
        std::string lhs = trim(body.substr(0, arrow));
        if (lhs.size() < 2 || lhs[0] != 'g') throw ParseError(lineno, "expected a generator before '->'");
        int k = 0;
        try {
            size_t used = 0;
            k = std::stoi(lhs.substr(1), &used);
            if (used != lhs.size() - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad generator '" + lhs + "'");
        }
        if (k < 1 || k > G.rank()) throw ParseError(lineno, "generator g" + std::to_string(k) + " out of range");
        images[k - 1] = G.collect(parse_word(trim(body.substr(arrow + 2)), G.rank(), lineno));
    }
    close();
    return out;
}

std::vector<AutMap> load_automorphisms(const PcGroup& G, const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_automorphisms(G, ss.str());
}

GroupElem apply(const PcGroup& G, const AutMap& a, const GroupElem& x)
{
    G.check_parent(x);
    return eval_normal_form(G, a.images, x);
}

GroupElem aut_commutator(const PcGroup& G, const GroupElem& x, const AutMap& a)
{
    return G.multiply(G.inverse(x), apply(G, a, x));
}

AutMap compose(const PcGroup& G, const AutMap& a, const AutMap& b)
{
    AutMap c;
    for (const auto& x : a.images) c.images.push_back(apply(G, b, x));
    return c;
}

AutMap inverse(const PcGroup& G, const AutMap& a)
{
    const AutMap id = identity_aut(G);
    AutMap prev = id, cur = a;
    for (long long k = 0; k < (1LL << 24); ++k) {
        if (cur == id) return prev;
        prev = cur;
        cur = compose(G, cur, a);
    }
    throw Error("automorphism order too large to invert");
}

AutMap aut_bracket(const PcGroup& G, const AutMap& a, const AutMap& b)
{
    return compose(G, compose(G, inverse(G, a), inverse(G, b)), compose(G, a, b));
}

bool leaves_invariant(const PcGroup& G, const AutMap& a, const Filter& f)
{
    for (const auto& H : f.values())
        for (const auto& x : H.gens())
            if (!membership(G, apply(G, a, x), H)) return false;
    return true;
}

bool delta_membership(const PcGroup& G, const AutMap& a, const Filter& f, const MonoidElem& s)
{
    if (!leaves_invariant(G, a, f)) throw Error("filter is not invariant under the automorphism");
    for (size_t i = 0; i < f.grades().size(); ++i) {
        const Subgroup target = f.at(f.grades()[i] + s);
        for (const auto& x : f.values()[i].gens())
            if (!membership(G, aut_commutator(G, x, a), target)) return false;
    }
    return true;
}

namespace {

std::vector<MonoidElem> member_grades(const PcGroup& G, const AutMap& a, const Filter& f)
{
    std::vector<MonoidElem> out;
    for (const auto& s : f.grades())
        if (delta_membership(G, a, f, s)) out.push_back(s);
    return out;
}

std::vector<MonoidElem> maximal(const std::vector<MonoidElem>& grades, const GradedMonoid& m)
{
    std::vector<MonoidElem> out;
    for (const auto& s : grades) {
        bool top = true;
        for (const auto& t : grades)
            if (m.precedes(s, t)) top = false;
        if (top) out.push_back(s);
    }
    return out;
}

}  // namespace

DeltaReport delta_layer_dims(const PcGroup& G, const std::vector<AutMap>& gens, const Filter& f, int word_length)
{
    DeltaReport rep;
    std::vector<std::vector<MonoidElem>> grades;
    for (const auto& a : gens) {
        grades.push_back(member_grades(G, a, f));
        rep.maximal_grades.push_back(maximal(grades.back(), f.monoid()));
    }
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j) {
            const AutMap c = aut_bracket(G, gens[i], gens[j]);
            for (const auto& s : rep.maximal_grades[i])
                for (const auto& t : rep.maximal_grades[j])
                    if (!delta_membership(G, c, f, s + t))
                        rep.failures.push_back("[a" + std::to_string(i) + ", a" + std::to_string(j) + "] not in Delta_" + to_string(s + t));
        }
    for (const auto& s : f.grades()) {
        std::vector<AutMap> members;
        for (size_t i = 0; i < gens.size(); ++i)
            for (const auto& g : grades[i])
                if (g == s) {
                    members.push_back(gens[i]);
                    members.push_back(inverse(G, gens[i]));
                }
        std::vector<AutMap> layer = members;
        for (int len = 2; len <= word_length && !members.empty(); ++len) {
            std::vector<AutMap> next;
            for (const auto& w : layer)
                for (const auto& m : members) next.push_back(compose(G, w, m));
            for (const auto& w : next)
                if (!delta_membership(G, w, f, s)) rep.failures.push_back("product of length " + std::to_string(len) + " leaves Delta_" + to_string(s));
            layer = std::move(next);
        }
    }
    return rep;
}

GradedMap induced_derivation(const PcGroup& G, const AutMap& a, const MonoidElem& s, const GradedLieRing& L, const Filter& f)
{
    if (s.is_zero()) throw Error("induced derivation needs a nonzero grade");
    if (!delta_membership(G, a, f, s)) throw Error("automorphism is not in Delta_" + to_string(s));
    GradedMap D;
    for (const auto& [u, comp] : L.components()) {
        auto it = L.components().find(u + s);
        if (it == L.components().end()) continue;
        const Section& target = it->second.section;
        gf::Matrix m(comp.dim(), target.dim(), L.prime());
        for (int i = 0; i < comp.dim(); ++i) m.set_row(i, target.coords(G, aut_commutator(G, comp.section.reps()[i], a)));
        D.emplace(u, std::move(m));
    }
    return D;
}

std::vector<std::string> check_derivation_law(const GradedLieRing& L, const GradedMap& D, const MonoidElem& s)
{
    std::vector<std::string> out;
    const int p = L.prime();
    auto image = [&](const MonoidElem& u, const gf::Vec& x, int dim) {
        auto it = D.find(u);
        if (it == D.end()) return gf::Vec(dim, 0);
        return gf::vec_mul(x, it->second);
    };
    for (const auto& [key, B] : L.brackets()) {
        const auto& [u, v] = key;
        const MonoidElem target = u + v + s;
        const int dt = L.dim(target);
        if (dt == 0) continue;
        const Bimap* left = L.bracket(u + s, v);
        const Bimap* right = L.bracket(u, v + s);
        for (int i = 0; i < B.dU; ++i)
            for (int j = 0; j < B.dV; ++j) {
                gf::Vec x(B.dU, 0), y(B.dV, 0);
                x[i] = 1;
                y[j] = 1;
                gf::Vec lhs = image(u + v, B.apply(x, y), dt);
                gf::Vec rhs(dt, 0);
                if (left) rhs = gf::vec_add(rhs, left->apply(image(u, x, left->dU), y), p);
                if (right) rhs = gf::vec_add(rhs, right->apply(x, image(v, y, right->dV)), p);
                if (lhs != rhs)
                    out.push_back("derivation law fails on grades " + to_string(u) + ", " + to_string(v) + " at basis pair (" +
                                  std::to_string(i) + ", " + std::to_string(j) + ")");
            }
    }
    return out;
}

std::vector<AutMap> central_automorphisms(const PcGroup& G)
{
    const Subgroup whole = G.whole();
    const Subgroup frattini = join(G, comm_subgroup(G, whole, whole), power_subgroup(G, whole));
    const Section top(G, whole, frattini);
    const Subgroup Z = centralizer_mod(G, whole, G.trivial());
    std::vector<GroupElem> omega;
    for (const auto& z : subgroup_elements(G, Z))
        if (G.power(z, G.prime()).is_identity()) omega.push_back(z);
    const Subgroup omega1 = subgroup_from_gens(G, omega);
    const AutMap id = identity_aut(G);
    std::vector<AutMap> out;
    for (int i = 0; i < top.dim(); ++i)
        for (const auto& z : omega1.gens()) {
            AutMap a;
            for (int k = 0; k < G.rank(); ++k) {
                const GroupElem g = G.generator(k);
                a.images.push_back(G.multiply(g, G.power(z, top.coords(G, g)[i])));
            }
            if (a == id || !aut_failures(G, a).empty()) continue;
            out.push_back(std::move(a));
        }
    return out;
}

}  // namespace filterlab
