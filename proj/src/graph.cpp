#include "semitrans/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace semitrans {

namespace {

std::string vertex_msg(const char* what, int v, int n) {
    return std::string(what) + ": vertex " + std::to_string(v) +
           " out of range for " + std::to_string(n) + " vertices";
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edge_list) : n_(vertex_count) {
    if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n_) throw std::invalid_argument(vertex_msg("Graph", u, n_));
        if (v < 0 || v >= n_) throw std::invalid_argument(vertex_msg("Graph", v, n_));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("Graph: duplicate edge in input");
    edges_ = std::move(edge_list);

    words_ = (n_ + 63) / 64;
    adj_.assign(static_cast<size_t>(n_), {});
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        bits_[static_cast<size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[static_cast<size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument(vertex_msg("Graph", v, n_));
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::span<const std::uint64_t> Graph::adjacency_row(int v) const {
    check_vertex(v);
    return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(es));
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: need n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: need n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("make_complete_bipartite: need a,b >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph(a + b, std::move(es));
}

BipartitionResult bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> depth(static_cast<size_t>(n), 0);

    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;  // component root lands in part_a
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = color[u] ^ 1;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    q.push(w);
                } else if (color[w] == color[u]) {
                    // BFS-layer conflict: walk both endpoints up to their
                    // lowest common ancestor; tree paths below it are
                    // disjoint, so the stitched cycle is simple and odd.
                    int x = u, y = w;
                    std::vector<int> side_x{x}, side_y{y};
                    while (depth[x] > depth[y]) side_x.push_back(x = parent[x]);
                    while (depth[y] > depth[x]) side_y.push_back(y = parent[y]);
                    while (x != y) {
                        side_x.push_back(x = parent[x]);
                        side_y.push_back(y = parent[y]);
                    }
                    std::vector<int> cycle(side_x.begin(), side_x.end());
                    cycle.insert(cycle.end(), side_y.rbegin() + 1, side_y.rend());
                    std::reverse(cycle.begin() + 1, cycle.end());  // keep u first, w second
                    return OddCycleWitness{std::move(cycle)};
                }
            }
        }
    }

    Bipartition parts;
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? parts.part_a : parts.part_b).push_back(v);
    return parts;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) +
                                        " out of range");
    std::vector<int> new_index(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < vs.size(); ++i) new_index[vs[i]] = static_cast<int>(i);

    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (new_index[u] != -1 && new_index[v] != -1)
            es.emplace_back(new_index[u], new_index[v]);
    return InducedSubgraph{Graph(static_cast<int>(vs.size()), std::move(es)), std::move(vs)};
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n, bool connected_only, int cap)
    : n_(n), connected_only_(connected_only) {
    if (n < 0) throw std::invalid_argument("LabeledGraphEnumerator: negative n");
    if (n > cap)
        throw ResourceLimitError("LabeledGraphEnumerator: n = " + std::to_string(n) +
                                 " exceeds enumeration cap " + std::to_string(cap));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_pairs_.emplace_back(i, j);
    mask_count_ = std::uint64_t{1} << all_pairs_.size();
}

std::optional<Graph> LabeledGraphEnumerator::next() {
    while (next_mask_ < mask_count_) {
        const std::uint64_t mask = next_mask_++;
        std::vector<Edge> es;
        for (size_t k = 0; k < all_pairs_.size(); ++k)
            if ((mask >> k) & 1) es.push_back(all_pairs_[k]);
        Graph g(n_, std::move(es));
        if (connected_only_ && !is_connected(g)) continue;
        last_mask_ = mask;
        return g;
    }
    return std::nullopt;
}

std::vector<Graph> all_labeled_graphs(int n, bool connected_only, int cap) {
    LabeledGraphEnumerator en(n, connected_only, cap);
    std::vector<Graph> out;
    while (auto g = en.next()) out.push_back(std::move(*g));
    return out;
}

}  // namespace semitrans
