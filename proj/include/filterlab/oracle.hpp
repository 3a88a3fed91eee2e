#pragma once

// Brute-force Cayley-table engine, used only to cross-check the collector
// and the subgroup algorithms on small groups.

#include <string>
#include <vector>

#include "filterlab/pcgroup.hpp"

namespace filterlab::oracle {

inline constexpr long long max_table_order = 1 << 12;

struct TableGroup {
    int order = 0;
    int identity = 0;
    std::vector<int> table;  // order * order, row-major
    std::vector<int> inverse;
    std::vector<GroupElem> labels;

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
    int comm(int a, int b) const { return mul(mul(inverse[a], inverse[b]), mul(a, b)); }
};

/// Element sets are sorted index lists into the table.
using ElementSet = std::vector<int>;

TableGroup cayley_from_pc(const PcGroup& G);

ElementSet generate(const TableGroup& T, const ElementSet& gens);
ElementSet commutator_set(const TableGroup& T, const ElementSet& A, const ElementSet& B);
/// { x : [x, h] in N for every h in H }
ElementSet centralizer_mod(const TableGroup& T, const ElementSet& H, const ElementSet& N);
ElementSet as_set(const TableGroup& T, const PcGroup& G, const Subgroup& H);

struct BruteSeries {
    std::vector<ElementSet> lower;  // gamma_1 = G, ..., trivial
    std::vector<ElementSet> upper;  // zeta^0 = 1, ..., G
};

BruteSeries brute_series(const TableGroup& T);

/// Differences between the pc engine and the table; empty means agreement.
/// Stops after `max_reports` entries.
std::vector<std::string> check_equiv(const PcGroup& G, const TableGroup& T, int max_reports = 10);

}  // namespace filterlab::oracle

namespace filterlab::oracle {

/// Brute-force isomorphism invariant: element orders, centralizer sizes,
/// membership in the center, derived and Frattini subgroups, the central
/// series orders and the sizes of all two-generator subgroups. Groups with
/// different fingerprints are not isomorphic.
std::string fingerprint(const PcGroup& G);

}  // namespace filterlab::oracle
