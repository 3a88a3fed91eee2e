#pragma once

// Census over a directory of presentations: refine every group, aggregate
// per order, and serialize deterministically.

#include <optional>
#include <string>
#include <vector>

#include "filterlab/refine.hpp"

namespace filterlab {

struct CensusEntry {
    std::string id;  // path relative to the census root, without extension
    long long order = 0;
    RefinementReport report;
    double runtime_ms = 0;
};

struct CensusOptions {
    int jobs = 1;
    std::optional<long long> order;  // only groups of this order
};

struct OrderSummary {
    long long order = 0;
    int total = 0;
    int flagged = 0;
    /// Flagged groups per emitting source; a group may count under several.
    std::vector<std::pair<std::string, int>> by_source;
};

struct CensusResult {
    std::vector<CensusEntry> entries;  // sorted by id
    std::vector<std::string> skipped;  // "<path>: <reason>"
    std::vector<OrderSummary> summary() const;
};

/// Every `.pcg` file below dir (recursively), in sorted order.
std::vector<std::string> census_files(const std::string& dir);
CensusResult run_census(const std::string& dir, const CensusOptions& opts = {});

/// One group's report; runtime_ms is included only when `timing` is set.
std::string report_json(const std::string& id, const PcGroup& G, const RefinementReport& r, std::optional<double> runtime_ms = {});
std::string census_json(const CensusResult& c, bool timing = false);
std::string census_table(const CensusResult& c);

}  // namespace filterlab
