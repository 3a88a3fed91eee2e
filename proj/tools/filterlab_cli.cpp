#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "filterlab/autfilter.hpp"
#include "filterlab/census.hpp"
#include "filterlab/oracle.hpp"

using namespace filterlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

enum Exit { ok = 0, check_failed = 1, input_error = 2 };

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<AutMap> sidecar_for(const PcGroup& G, const std::string& path)
{
    fs::path aut = fs::path(path).replace_extension(".aut");
    std::vector<AutMap> out = parse_automorphisms(G, read_file(path));
    if (fs::exists(aut)) {
        auto more = load_automorphisms(G, aut.string());
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

std::vector<std::string> delta_suite(const PcGroup& G, const std::vector<AutMap>& auts, const Filter& f)
{
    auto rep = delta_layer_dims(G, auts, f);
    std::vector<std::string> out = rep.failures;
    const GradedLieRing L = graded_lie_ring(G, f);
    for (size_t i = 0; i < auts.size(); ++i)
        for (size_t j = 0; j < auts.size(); ++j) {
            const AutMap c = aut_bracket(G, auts[i], auts[j]);
            for (const auto& s : rep.maximal_grades[i])
                for (const auto& t : rep.maximal_grades[j])
                    for (size_t k = 0; k < f.grades().size(); ++k)
                        for (const auto& x : f.values()[k].gens())
                            if (!membership(G, aut_commutator(G, x, c), f.at(s + t + f.grades()[k])))
                                out.push_back("[x, [a" + std::to_string(i) + ", a" + std::to_string(j) + "]] escapes grade " +
                                              to_string(s + t + f.grades()[k]));
        }
    for (size_t i = 0; i < auts.size(); ++i)
        for (const auto& s : rep.maximal_grades[i])
            if (!s.is_zero())
                for (const auto& e : check_derivation_law(L, induced_derivation(G, auts[i], s, L, f), s)) out.push_back(e);
    return out;
}

int cmd_verify(const std::string& path)
{
    PcGroup G;
    try {
        G = parse_pcgroup(read_file(path), false);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    bool all = true;
    bool sound = true;
    auto suite = [&](const std::string& name, const std::function<std::vector<std::string>()>& run) {
        if (!sound) {
            std::cout << "SKIP " << name << "\n";
            return;
        }
        std::vector<std::string> fails;
        try {
            fails = run();
        } catch (const std::exception& e) {
            fails = {e.what()};
        }
        if (fails.empty()) {
            std::cout << "PASS " << name << "\n";
        } else {
            all = false;
            std::cout << "FAIL " << name << ": " << fails.front();
            if (fails.size() > 1) std::cout << " (+" << fails.size() - 1 << " more)";
            std::cout << "\n";
        }
    };
    suite("presentation consistency", [&] { return G.overlap_failures(); });
    if (G.order() <= (1 << 10)) {
        suite("oracle equivalence", [&] { return oracle::check_equiv(G, oracle::cayley_from_pc(G)); });
    } else {
        std::cout << "SKIP oracle equivalence (order above 1024)\n";
    }
    sound = all;
    suite("filter axioms", [&] {
        auto a = verify_filter(G, lower_central(G));
        auto b = verify_filter(G, exponent_p_lcs(G));
        a.insert(a.end(), b.begin(), b.end());
        return a;
    });
    suite("layering axioms", [&] { return verify_layering(G, upper_central(G)); });
    suite("sift", [&] {
        auto a = verify_sift(G, lower_central(G), upper_central(G));
        auto b = verify_sift(G, exponent_p_lcs(G), upper_central(G));
        a.insert(a.end(), b.begin(), b.end());
        return a;
    });
    suite("Lie ring laws", [&] {
        auto L = graded_lie_ring(G, exponent_p_lcs(G));
        auto a = check_jacobi(L);
        auto b = check_alternating(L);
        a.insert(a.end(), b.begin(), b.end());
        return a;
    });
    suite("module law", [&] {
        auto f = exponent_p_lcs(G);
        auto l = shift(upper_exponent_p(G));
        auto L = graded_lie_ring(G, f);
        return check_module_law(L, graded_module(G, f, l, L));
    });
    suite("integral module law", [&] { return check_integral_module(G, lower_central(G), shift(upper_central(G)), 100, 1); });
    suite("automorphism filter", [&] {
        auto gens = central_automorphisms(G);
        auto extra = sidecar_for(G, path);
        gens.insert(gens.end(), extra.begin(), extra.end());
        for (int k = 0; k < G.rank(); ++k) gens.push_back(inner_aut(G, G.generator(k)));
        return delta_suite(G, gens, exponent_p_lcs(G));
    });
    return all ? ok : check_failed;
}

json series_stage(const PcGroup& G)
{
    return {{"lower_central", orders(G, lower_central(G))},
            {"upper_central", orders(G, upper_central(G))},
            {"exponent_p_lcs", orders(G, exponent_p_lcs(G))},
            {"upper_exponent_p", orders(G, upper_exponent_p(G))}};
}

json lie_stage(const PcGroup& G)
{
    const auto L = graded_lie_ring(G, exponent_p_lcs(G));
    json dims = json::array(), grades = json::array(), brackets = json::array();
    for (const auto& [g, c] : L.components()) {
        dims.push_back(c.dim());
        grades.push_back(g.coords());
    }
    for (const auto& [key, B] : L.brackets())
        brackets.push_back({{"s", key.first.coords()}, {"t", key.second.coords()}, {"shape", {B.dU, B.dV, B.dW}}, {"nonzero", !B.is_zero()}, {"tensor", B.data}});
    return {{"filter", "exponent_p_lcs"}, {"grades", grades}, {"dims", dims}, {"brackets", brackets}};
}

json scalars_stage(const PcGroup& G)
{
    const auto L = graded_lie_ring(G, exponent_p_lcs(G));
    json out = json::array();
    for (const auto& [key, B] : L.brackets()) {
        if (key.second < key.first) continue;
        const auto an = characteristic_subspaces(B);
        json em = json::array();
        for (const auto& e : an.emissions)
            em.push_back({{"side", to_string(e.side)}, {"dim", e.space.dim()}, {"ring", to_string(e.ring)}, {"tag", e.tag}});
        out.push_back({{"s", key.first.coords()},
                       {"t", key.second.coords()},
                       {"Der", an.dims.der},
                       {"L", an.dims.left},
                       {"M", an.dims.mid},
                       {"R", an.dims.right},
                       {"Cent", an.dims.cent},
                       {"M_radical", an.dims.mid_radical},
                       {"Cent_radical", an.dims.cent_radical},
                       {"Cent_idempotents", an.dims.cent_idempotents},
                       {"emissions", em}});
    }
    return out;
}

json delta_json(const PcGroup& G, const std::vector<AutMap>& gens, const Filter& f)
{
    auto rep = delta_layer_dims(G, gens, f);
    json maxes = json::array();
    for (const auto& m : rep.maximal_grades) {
        json g = json::array();
        for (const auto& s : m) g.push_back(s.coords());
        maxes.push_back(g);
    }
    return {{"generators", gens.size()}, {"maximal_grades", maxes}, {"failures", rep.failures}};
}

json aut_stage(const PcGroup& G, const std::string& path)
{
    auto central = central_automorphisms(G);
    auto side = sidecar_for(G, path);
    auto all = central;
    all.insert(all.end(), side.begin(), side.end());
    return {{"central_automorphisms", central.size()}, {"sidecar_automorphisms", side.size()}, {"delta", delta_json(G, all, lower_central(G))}};
}

int cmd_report(const std::string& path, const std::string& stages_arg)
{
    static const std::vector<std::string> known{"series", "lie", "scalars", "aut", "refine"};
    std::vector<std::string> stages;
    std::stringstream ss(stages_arg);
    for (std::string s; std::getline(ss, s, ',');) {
        if (std::find(known.begin(), known.end(), s) == known.end()) {
            std::cerr << "error: unknown stage '" << s << "' (expected series, lie, scalars, aut, refine)\n";
            return input_error;
        }
        stages.push_back(s);
    }
    PcGroup G;
    try {
        G = load_pcgroup(path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    json out;
    out["group"] = fs::path(path).stem().string();
    out["order"] = G.order();
    try {
        for (const auto& s : stages) {
            if (s == "series") out["series"] = series_stage(G);
            if (s == "lie") out["lie"] = lie_stage(G);
            if (s == "scalars") out["scalars"] = scalars_stage(G);
            if (s == "aut") out["aut"] = aut_stage(G, path);
            if (s == "refine") out["refine"] = json::parse(report_json(out["group"], G, refine_to_fixpoint(G)));
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return check_failed;
    }
    std::cout << out.dump(2) << "\n";
    return ok;
}

int cmd_census(const std::string& dir, int jobs, bool as_json, long long order, bool timing)
{
    CensusOptions o;
    o.jobs = jobs;
    if (order > 0) o.order = order;
    CensusResult c;
    try {
        c = run_census(dir, o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    for (const auto& s : c.skipped) std::cerr << "warning: skipped " << s << "\n";
    std::cout << (as_json ? census_json(c, timing) + "\n" : census_table(c));
    return ok;
}

int cmd_aut(const std::string& path, const std::string& sidecar)
{
    PcGroup G;
    std::vector<AutMap> auts;
    try {
        G = load_pcgroup(path);
        auts = load_automorphisms(G, sidecar);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    const Filter f = lower_central(G);
    json out = delta_json(G, auts, f);
    std::vector<std::string> fails;
    try {
        fails = delta_suite(G, auts, exponent_p_lcs(G));
    } catch (const Error& e) {
        fails = {e.what()};
    }
    out["laws"] = fails;
    std::cout << out.dump(2) << "\n";
    return fails.empty() && out["failures"].empty() ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"filterlab: filters, graded Lie rings and refinements of finite p-groups"};
    app.require_subcommand(1);

    std::string file, dir, stages = "series,lie,scalars,aut,refine", sidecar;
    int jobs = 1;
    bool as_json = false, timing = false;
    long long order = 0;

    auto* verify = app.add_subcommand("verify", "run every consistency and law check on a presentation");
    verify->add_option("file", file, "a .pcg presentation")->required();

    auto* report = app.add_subcommand("report", "emit per-stage JSON for one group");
    report->add_option("file", file, "a .pcg presentation")->required();
    report->add_option("--stages", stages, "comma-separated: series, lie, scalars, aut, refine");

    auto* census = app.add_subcommand("census", "refine every group under a directory");
    census->add_option("dir", dir, "directory searched recursively for .pcg files")->required();
    census->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    census->add_flag("--json", as_json, "full JSON instead of the summary table");
    census->add_option("--order", order, "only groups of this order");
    census->add_flag("--timing", timing, "include runtime_ms in JSON");

    auto* aut = app.add_subcommand("aut", "check the induced filter of supplied automorphisms");
    aut->add_option("file", file, "a .pcg presentation")->required();
    aut->add_option("--sidecar", sidecar, "file of aut: lines")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }
    if (*verify) return cmd_verify(file);
    if (*report) return cmd_report(file, stages);
    if (*census) return cmd_census(dir, jobs, as_json, order, timing);
    if (*aut) return cmd_aut(file, sidecar);
    return input_error;
}
