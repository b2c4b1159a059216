#ifndef SEMITRANS_TESTS_SUPPORT_HPP
#define SEMITRANS_TESTS_SUPPORT_HPP

// Independent brute-force oracles used to derive expected values. These
// deliberately avoid the library's algorithms: they work from the raw edge
// list via adjacency matrices and exhaustive enumeration only.

#include <algorithm>
#include <numeric>
#include <vector>

#include "semitrans/graph.hpp"
#include "semitrans/orientation.hpp"

namespace test_support {

inline std::vector<std::vector<bool>> adjacency_matrix(const semitrans::Graph& g) {
    std::vector<std::vector<bool>> adj(
        static_cast<size_t>(g.vertex_count()),
        std::vector<bool>(static_cast<size_t>(g.vertex_count()), false));
    for (auto [u, v] : g.edges()) {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    return adj;
}

inline bool naive_connected(const semitrans::Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    auto adj = adjacency_matrix(g);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n; ++y)
            if (adj[x][y] && !seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Definition-level bipartiteness: some 2-coloring with no monochromatic
// edge exists. Exponential; fine for the small graphs the tests use.
inline bool naive_bipartite(const semitrans::Graph& g) {
    const int n = g.vertex_count();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool good = true;
        for (auto [u, v] : g.edges())
            if (((mask >> u) & 1) == ((mask >> v) & 1)) {
                good = false;
                break;
            }
        if (good) return true;
    }
    return n == 0;
}

inline bool naive_has_triangle(const semitrans::Graph& g) {
    auto adj = adjacency_matrix(g);
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (adj[a][b] && adj[b][c] && adj[a][c]) return true;
    return false;
}

inline bool isomorphic(const semitrans::Graph& a, const semitrans::Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    auto ma = adjacency_matrix(a);
    auto mb = adjacency_matrix(b);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            for (int j = i + 1; j < n && match; ++j)
                if (ma[i][j] != mb[perm[i]][perm[j]]) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Validates an odd cycle claim directly against adjacency.
inline bool valid_odd_cycle(const semitrans::Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    auto adj = adjacency_matrix(g);
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) return false;
        if (!adj[u][v]) return false;
    }
    return true;
}

// Validates a two-part split directly: disjoint cover with all edges across.
inline bool valid_bipartition(const semitrans::Graph& g, const std::vector<int>& part_a,
                              const std::vector<int>& part_b) {
    std::vector<int> side(static_cast<size_t>(g.vertex_count()), -1);
    for (int v : part_a) {
        if (v < 0 || v >= g.vertex_count() || side[v] != -1) return false;
        side[v] = 0;
    }
    for (int v : part_b) {
        if (v < 0 || v >= g.vertex_count() || side[v] != -1) return false;
        side[v] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (side[v] == -1) return false;
    for (auto [u, v] : g.edges())
        if (side[u] == side[v]) return false;
    return true;
}

// Arc count of the longest directed path, by DP over a DAG.
inline int longest_directed_path(const semitrans::Orientation& o) {
    const int n = o.base().vertex_count();
    std::vector<int> best(static_cast<size_t>(n), -1);
    auto rec = [&](auto&& self, int v) -> int {
        if (best[v] >= 0) return best[v];
        int r = 0;
        for (int w : o.out_neighbors(v)) r = std::max(r, 1 + self(self, w));
        return best[v] = r;
    };
    int overall = 0;
    for (int v = 0; v < n; ++v) overall = std::max(overall, rec(rec, v));
    return overall;
}

inline semitrans::Orientation orientation_from_mask(const semitrans::Graph& g,
                                                    unsigned long long mask) {
    std::vector<std::uint8_t> flags(static_cast<size_t>(g.edge_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) flags[e] = (mask >> e) & 1;
    return semitrans::Orientation(g, std::move(flags));
}

}  // namespace test_support

#endif  // SEMITRANS_TESTS_SUPPORT_HPP
