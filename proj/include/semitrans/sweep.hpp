#ifndef SEMITRANS_SWEEP_HPP
#define SEMITRANS_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "semitrans/certificates.hpp"
#include "semitrans/solver.hpp"

namespace semitrans {

/// One classification row: a base graph, its bipartiteness, and the
/// solver's decision on its Mycielskian (optionally the extended one too).
struct SweepRow {
    std::string id;
    int n = 0;
    int m = 0;
    bool bipartite = false;
    bool mu_sat = false;
    long long nodes = 0;
    double millis = 0.0;
    std::optional<bool> mu_ext_sat;
    long long ext_nodes = 0;
    double ext_millis = 0.0;
};

struct SweepOptions {
    /// Enumerate all labeled graphs on 1..max_n vertices (0 disables).
    int max_n = 0;
    bool connected_only = true;
    int enumeration_cap = kDefaultEnumerationCap;
    /// Family sweep: one of "cycle", "path", "complete" over sizes
    /// family_from..family_to (empty family disables).
    std::string family;
    int family_from = 0;
    int family_to = 0;
    /// Also classify the extended Mycielskian of every row.
    bool extended = false;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    /// Rows violating "Mycielskian satisfiable iff base bipartite"
    /// (checked for the extended column as well when present).
    std::vector<std::string> mismatch_ids;

    bool ok() const noexcept { return mismatch_ids.empty(); }
};

SweepReport run_sweep(const SweepOptions& opts);

/// Fixed columns id,n,m,bipartite,mu_decision,nodes,millis; an extended
/// sweep appends mu_ext_decision,ext_nodes,ext_millis.
void write_sweep_csv(std::ostream& out, const SweepReport& report, bool extended);

nlohmann::json sweep_report_to_json(const SweepReport& report);

nlohmann::json solve_result_to_json(const SolveResult& result);
nlohmann::json coloring_property_report_to_json(const ColoringPropertyReport& report);
nlohmann::json pattern_decomposition_to_json(const PatternDecomposition& decomposition);

}  // namespace semitrans

#endif  // SEMITRANS_SWEEP_HPP
