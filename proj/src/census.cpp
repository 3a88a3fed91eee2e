#include "filterlab/census.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace filterlab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json grade_json(const MonoidElem& m) { return m.coords(); }

json report_object(const std::string& id, long long order, const RefinementReport& r, std::optional<double> runtime_ms)
{
    json j;
    j["group"] = id;
    j["order"] = order;
    j["seed"] = {{"dims", r.seed_dims}};
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"grade", grade_json(s.grade)},
                         {"provenance", {{"ring", s.ring}, {"tag", s.tag}, {"side", s.side}, {"product", {grade_json(s.s), grade_json(s.t)}}}},
                         {"new_index", s.new_index}});
    j["steps"] = steps;
    j["classification"] = to_string(r.classification);
    j["cap_hit"] = r.cap_hit;
    json stages = json::array();
    for (const auto& st : r.stages) {
        json rings = json::array();
        for (const auto& d : st.rings)
            rings.push_back({{"s", grade_json(d.s)}, {"t", grade_json(d.t)}, {"Der", d.der}, {"L", d.left}, {"M", d.mid}, {"R", d.right}, {"Cent", d.cent}});
        stages.push_back(rings);
    }
    j["ring_dims"] = stages;
    j["flagged_by"] = flagging_sources(r);
    if (runtime_ms) j["runtime_ms"] = *runtime_ms;
    return j;
}

const std::vector<std::string> source_rows{"Der", "Mid", "Left", "Right", "Cent", "Radical"};

}  // namespace

std::vector<std::string> census_files(const std::string& dir)
{
    std::vector<std::string> out;
    if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".pcg") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

CensusResult run_census(const std::string& dir, const CensusOptions& opts)
{
    const auto files = census_files(dir);
    struct Slot {
        std::optional<CensusEntry> entry;
        std::string error;
    };
    std::vector<Slot> slots(files.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i = next++; i < files.size(); i = next++) {
            try {
                const PcGroup G = load_pcgroup(files[i]);
                if (opts.order && G.order() != *opts.order) continue;
                const auto t0 = std::chrono::steady_clock::now();
                CensusEntry e;
                e.id = fs::relative(files[i], dir).replace_extension().generic_string();
                e.order = G.order();
                e.report = refine_to_fixpoint(G);
                e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                slots[i].entry = std::move(e);
            } catch (const std::exception& ex) {
                slots[i].error = files[i] + ": " + ex.what();
            }
        }
    };
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < jobs; ++k) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    CensusResult res;
    for (auto& s : slots) {
        if (s.entry) res.entries.push_back(std::move(*s.entry));
        if (!s.error.empty()) res.skipped.push_back(s.error);
    }
    std::sort(res.entries.begin(), res.entries.end(), [](const CensusEntry& a, const CensusEntry& b) { return a.id < b.id; });
    return res;
}

std::vector<OrderSummary> CensusResult::summary() const
{
    std::map<long long, OrderSummary> by;
    for (const auto& e : entries) {
        auto& s = by[e.order];
        s.order = e.order;
        if (s.by_source.empty())
            for (const auto& r : source_rows) s.by_source.emplace_back(r, 0);
        ++s.total;
        if (e.report.classification != Classification::non_semi_classical) continue;
        ++s.flagged;
        for (const auto& src : flagging_sources(e.report))
            for (auto& [name, n] : s.by_source)
                if (name == src) ++n;
    }
    std::vector<OrderSummary> out;
    for (auto& [o, s] : by) out.push_back(std::move(s));
    return out;
}

std::string report_json(const std::string& id, const PcGroup& G, const RefinementReport& r, std::optional<double> runtime_ms)
{
    return report_object(id, G.order(), r, runtime_ms).dump(2);
}

std::string census_json(const CensusResult& c, bool timing)
{
    json j;
    json groups = json::array();
    for (const auto& e : c.entries)
        groups.push_back(report_object(e.id, e.order, e.report, timing ? std::optional<double>(e.runtime_ms) : std::nullopt));
    j["groups"] = groups;
    json summary = json::array();
    for (const auto& s : c.summary()) {
        json rows = json::object();
        for (const auto& [name, n] : s.by_source) rows[name] = n;
        summary.push_back({{"order", s.order}, {"total", s.total}, {"flagged", s.flagged}, {"proportion", s.total ? json(static_cast<double>(s.flagged) / s.total) : json("n/a")},
                           {"by_source", rows}});
    }
    j["summary"] = summary;
    j["skipped"] = c.skipped;
    return j.dump(2);
}

std::string census_table(const CensusResult& c)
{
    std::ostringstream out;
    char buf[160];
    const auto sums = c.summary();
    std::snprintf(buf, sizeof buf, "%8s %6s %8s %10s\n", "order", "total", "flagged", "proportion");
    out << buf;
    if (sums.empty()) {
        std::snprintf(buf, sizeof buf, "%8s %6d %8d %10s\n", "-", 0, 0, "n/a");
        out << buf;
    }
    for (const auto& s : sums) {
        std::snprintf(buf, sizeof buf, "%8lld %6d %8d %9.1f%%\n", s.order, s.total, s.flagged, 100.0 * s.flagged / s.total);
        out << buf;
    }
    if (!sums.empty()) {
        out << "\nflagged by source\n";
        std::snprintf(buf, sizeof buf, "%8s", "source");
        out << buf;
        for (const auto& s : sums) {
            std::snprintf(buf, sizeof buf, " %8lld", s.order);
            out << buf;
        }
        out << "\n";
        for (size_t r = 0; r < source_rows.size(); ++r) {
            std::snprintf(buf, sizeof buf, "%8s", source_rows[r].c_str());
            out << buf;
            for (const auto& s : sums) {
                const int n = s.by_source[r].second;
                std::snprintf(buf, sizeof buf, " %3d %3.0f%%", n, 100.0 * n / s.total);
                out << buf;
            }
            out << "\n";
        }
    }
    for (const auto& sk : c.skipped) out << "skipped " << sk << "\n";
    return out.str();
}

}  // namespace filterlab
