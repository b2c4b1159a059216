#ifndef SEMITRANS_GRAPH_HPP
#define SEMITRANS_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace semitrans {

/// Thrown when an operation would exceed its configured resource budget
/// (enumeration caps, path-count budgets, exhaustive-search edge caps).
/// A budget overrun never silently degrades into a wrong answer.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unordered edge stored canonically as (min, max).
using Edge = std::pair<int, int>;

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// The edge set is canonical: each pair stored once as (u, v) with u < v,
/// sorted lexicographically. No self-loops, no duplicates. Instances are
/// safe to share across threads after construction.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an arbitrary edge list. Endpoint order within a
    /// pair does not matter. Throws std::invalid_argument on self-loops,
    /// duplicate edges, or out-of-range endpoints.
    Graph(int vertex_count, std::vector<Edge> edge_list);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// Canonical sorted edge list.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    Edge edge(int index) const { return edges_.at(static_cast<size_t>(index)); }

    /// Sorted neighbor list of v.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    bool adjacent(int u, int v) const;

    /// Index of edge {u,v} in the canonical list, or -1 if not an edge.
    int edge_index(int u, int v) const;

    /// Adjacency row of v as a bitset (row_words() 64-bit words).
    std::span<const std::uint64_t> adjacency_row(int v) const;
    int row_words() const noexcept { return words_; }

    bool operator==(const Graph& other) const noexcept {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

/// Cycle graph on n >= 3 vertices, edges {i, (i+1) mod n}.
Graph make_cycle(int n);
/// Path on n >= 1 vertices.
Graph make_path(int n);
/// Complete graph on n >= 1 vertices.
Graph make_complete(int n);
/// Complete bipartite graph with parts 0..a-1 and a..a+b-1, a,b >= 1.
Graph make_complete_bipartite(int a, int b);

/// Two-coloring certificate: every edge has one endpoint in each part.
struct Bipartition {
    std::vector<int> part_a;
    std::vector<int> part_b;
};

/// Odd-cycle certificate: c0,...,c2k, pairwise distinct, consecutive
/// vertices adjacent cyclically, odd length >= 3.
struct OddCycleWitness {
    std::vector<int> cycle;
};

using BipartitionResult = std::variant<Bipartition, OddCycleWitness>;

/// Decides bipartiteness with a certificate either way. Components are
/// processed in increasing order of their smallest vertex; each component
/// root is placed in part_a. Parts are returned sorted.
BipartitionResult bipartition(const Graph& g);

/// Induced subgraph plus the mapping from new indices back to the parent's.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // to_parent[new index] = old index
};

/// Subgraph induced by `vertices` (deduplicated, relabeled in sorted order).
/// Throws std::invalid_argument on out-of-range vertices.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool is_connected(const Graph& g);

inline constexpr int kDefaultEnumerationCap = 5;

/// Streams all 2^(n(n-1)/2) labeled graphs on n vertices in ascending
/// edge-mask order; bit k of the mask is the k-th vertex pair in
/// lexicographic order (0,1),(0,2),...,(n-2,n-1). No isomorphism dedup.
/// Single-consumer. Refuses n above the cap with ResourceLimitError.
class LabeledGraphEnumerator {
public:
    LabeledGraphEnumerator(int n, bool connected_only, int cap = kDefaultEnumerationCap);

    /// Next graph, or nullopt when exhausted.
    std::optional<Graph> next();

    /// Edge mask of the most recently returned graph.
    std::uint64_t last_mask() const noexcept { return last_mask_; }

private:
    int n_;
    bool connected_only_;
    std::uint64_t next_mask_ = 0;
    std::uint64_t mask_count_ = 0;
    std::uint64_t last_mask_ = 0;
    std::vector<Edge> all_pairs_;
};

/// Convenience: materializes the enumeration into a vector.
std::vector<Graph> all_labeled_graphs(int n, bool connected_only,
                                      int cap = kDefaultEnumerationCap);

}  // namespace semitrans

#endif  // SEMITRANS_GRAPH_HPP
