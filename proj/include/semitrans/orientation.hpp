#ifndef SEMITRANS_ORIENTATION_HPP
#define SEMITRANS_ORIENTATION_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "semitrans/graph.hpp"

namespace semitrans {

/// Total orientation of a graph: every edge carries exactly one direction.
/// Immutable after construction.
class Orientation {
public:
    /// Directions given per canonical edge index: flags[e] == 0 orients
    /// edge (u,v) with u < v as u->v, 1 as v->u.
    Orientation(Graph base, std::vector<std::uint8_t> toward_high_flags);

    const Graph& base() const noexcept { return base_; }

    /// (tail, head) of the edge with canonical index e.
    std::pair<int, int> arc(int edge_index) const;
    /// All arcs in canonical edge order.
    std::vector<std::pair<int, int>> arcs() const;

    bool is_arc(int from, int to) const;

    const std::vector<int>& out_neighbors(int v) const;
    const std::vector<int>& in_neighbors(int v) const;

    const std::vector<std::uint8_t>& flags() const noexcept { return toward_high_; }

    bool operator==(const Orientation& other) const noexcept {
        return base_ == other.base_ && toward_high_ == other.toward_high_;
    }

private:
    Graph base_;
    std::vector<std::uint8_t> toward_high_;
    std::vector<std::vector<int>> out_, in_;
};

/// Builds an Orientation from a list of (tail, head) pairs; the list must
/// cover every edge of g exactly once. Throws std::invalid_argument on a
/// pair that is not an edge, a duplicate, or a missing edge.
Orientation orient(const Graph& g, const std::vector<std::pair<int, int>>& directions);

/// Directed cycle certificate: closed walk, first == last, every
/// consecutive pair an arc, at least 3 arcs.
struct CycleWitness {
    std::vector<int> cycle;
};

/// Shortcut certificate: a directed path v0->...->vk (k >= 3) whose
/// endpoints are joined by the arc v0->vk, together with a pair (a, b) on
/// the path, a before b, that is not an edge of the base graph. In an
/// acyclic orientation a missing forward arc between path vertices forces
/// non-adjacency, so the pair refutes transitivity of the configuration.
struct ShortcutWitness {
    std::vector<int> path;
    std::pair<int, int> shortcut_edge;
    std::pair<int, int> violation;
};

struct Verdict {
    enum class Kind { SemiTransitive, Cyclic, HasShortcut };

    Kind kind = Kind::SemiTransitive;
    std::optional<CycleWitness> cycle;        // set iff Cyclic
    std::optional<ShortcutWitness> shortcut;  // set iff HasShortcut

    bool semi_transitive() const noexcept { return kind == Kind::SemiTransitive; }

    static Verdict ok() { return {}; }
    static Verdict cyclic(CycleWitness w) {
        return {Kind::Cyclic, std::move(w), std::nullopt};
    }
    static Verdict has_shortcut(ShortcutWitness w) {
        return {Kind::HasShortcut, std::nullopt, std::move(w)};
    }
};

/// Topological order with every arc going forward, or a directed cycle.
/// Kahn's algorithm with ascending-vertex tie-break, so the order is
/// deterministic; the cycle witness starts at its smallest vertex.
std::variant<std::vector<int>, CycleWitness> is_acyclic(const Orientation& o);

inline constexpr long long kDefaultPathBudget = 10'000'000;

/// Literal-definition checker: enumerates every directed path and tests
/// the transitivity requirement on paths whose endpoints are adjacent.
/// Exponential; intended for small instances and as the ground-truth
/// oracle for check_semi_transitive. When several shortcuts exist the
/// witness minimal by (path length, path sequence) is returned, and the
/// violation is the first missing pair in position-lexicographic order.
/// Throws ResourceLimitError once more than path_budget directed paths
/// have been enumerated — never returns a wrong verdict.
Verdict check_semi_transitive_reference(const Orientation& o,
                                        long long path_budget = kDefaultPathBudget);

/// Polynomial checker via reachability closure. For each arc u->v it
/// searches for a sandwich pair (a, b): u reaches a (or a = u), a reaches
/// b by a nonempty path, b reaches v (or b = v), with a, b non-adjacent in
/// the base graph. Any such pair yields a directed path u~>a~>b~>v shortcut
/// by the arc u->v; conversely, in a DAG every shortcut produces one, since
/// an adjacent forward pair on a path must be oriented forward. Equivalence
/// with the reference checker is a tested property, not an assumption.
/// Witness choice matches the reference tie-break: minimal by
/// (path length, path sequence, violation).
Verdict check_semi_transitive(const Orientation& o);

/// Replays a verdict's certificate against o: true iff every claimed arc,
/// path membership, and non-adjacency holds. SemiTransitive verdicts carry
/// no claims and replay as true.
bool replay_witness(const Orientation& o, const Verdict& verdict);

}  // namespace semitrans

#endif  // SEMITRANS_ORIENTATION_HPP
