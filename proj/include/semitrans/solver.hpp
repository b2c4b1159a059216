#ifndef SEMITRANS_SOLVER_HPP
#define SEMITRANS_SOLVER_HPP

#include <optional>
#include <vector>

#include "semitrans/orientation.hpp"

namespace semitrans {

inline constexpr int kDefaultExhaustiveEdgeCap = 22;

struct SolveOptions {
    enum class Mode { Auto, Exhaustive, Backtracking };

    std::optional<int> forced_source;  // all incident edges oriented outward
    std::optional<int> forced_sink;    // all incident edges oriented inward
    Mode mode = Mode::Auto;
    /// Custom processing order: a permutation of the canonical edge
    /// indices. Forced edges are still assigned up front.
    std::optional<std::vector<int>> edge_order;
    /// solve_exhaustive refuses instances with more edges than this.
    int exhaustive_edge_cap = kDefaultExhaustiveEdgeCap;
};

struct SearchStats {
    long long nodes = 0;            // direction assignments attempted
    long long cycle_prunes = 0;     // branches cut by a directed cycle
    long long shortcut_prunes = 0;  // branches cut by a completed shortcut
    double millis = 0.0;            // wall time; excluded from golden comparisons
};

struct SolveResult {
    std::optional<Orientation> certificate;  // set iff satisfiable
    SearchStats stats;

    bool sat() const noexcept { return certificate.has_value(); }
};

/// Ground-truth oracle: iterates all 2^m direction assignments in ascending
/// edge-mask order (bit e = direction of canonical edge e; forced edges are
/// pinned), checking each one. Returns the first satisfying assignment.
/// Throws ResourceLimitError when the edge count exceeds the configured cap.
SolveResult solve_exhaustive(const Graph& g, const SolveOptions& opts = {});

/// Decides semi-transitive orientability. Mode Backtracking (and Auto)
/// searches edge by edge in a fixed order — edges incident to forced
/// vertices first, then descending endpoint degree sum — pruning partial
/// assignments that close a directed cycle or complete a shortcut among
/// the oriented edges, and verifying leaves with check_semi_transitive.
/// Mode Exhaustive delegates to solve_exhaustive. With forced_source (or
/// forced_sink) the search is restricted to that subspace; the decision
/// matches the unconstrained one because a semi-transitive graph always
/// admits an orientation making any chosen vertex a source (or sink).
SolveResult solve(const Graph& g, const SolveOptions& opts = {});

/// Per-vertex source/sink relocation check for a satisfiable graph: solve
/// with forced_source=v and forced_sink=v for every vertex v. Violations
/// are expected to be empty. Throws std::invalid_argument when g itself is
/// unsatisfiable.
struct SourceTheoremReport {
    struct Entry {
        int vertex;
        bool source_sat;
        bool sink_sat;
    };
    std::vector<Entry> entries;
    std::vector<int> violations;  // vertices failing either direction

    bool all_pass() const noexcept { return violations.empty(); }
};

SourceTheoremReport verify_source_theorem(const Graph& g);

}  // namespace semitrans

#endif  // SEMITRANS_SOLVER_HPP
