#include "semitrans/orientation.hpp"

#include <algorithm>
#include <string>

#include "bitrows.hpp"

namespace semitrans {

Orientation::Orientation(Graph base, std::vector<std::uint8_t> toward_high_flags)
    : base_(std::move(base)), toward_high_(std::move(toward_high_flags)) {
    if (static_cast<int>(toward_high_.size()) != base_.edge_count())
        throw std::invalid_argument("Orientation: one direction flag per edge required");
    const int n = base_.vertex_count();
    out_.assign(static_cast<size_t>(n), {});
    in_.assign(static_cast<size_t>(n), {});
    for (int e = 0; e < base_.edge_count(); ++e) {
        auto [t, h] = arc(e);
        out_[t].push_back(h);
        in_[h].push_back(t);
    }
    for (auto& v : out_) std::sort(v.begin(), v.end());
    for (auto& v : in_) std::sort(v.begin(), v.end());
}

std::pair<int, int> Orientation::arc(int edge_index) const {
    auto [u, v] = base_.edge(edge_index);
    return toward_high_[edge_index] ? std::pair{v, u} : std::pair{u, v};
}

std::vector<std::pair<int, int>> Orientation::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(toward_high_.size());
    for (int e = 0; e < base_.edge_count(); ++e) out.push_back(arc(e));
    return out;
}

bool Orientation::is_arc(int from, int to) const {
    int e = base_.edge_index(from, to);
    if (e < 0) return false;
    return arc(e) == std::pair{from, to};
}

const std::vector<int>& Orientation::out_neighbors(int v) const {
    if (v < 0 || v >= base_.vertex_count())
        throw std::invalid_argument("out_neighbors: vertex out of range");
    return out_[v];
}

const std::vector<int>& Orientation::in_neighbors(int v) const {
    if (v < 0 || v >= base_.vertex_count())
        throw std::invalid_argument("in_neighbors: vertex out of range");
    return in_[v];
}

Orientation orient(const Graph& g, const std::vector<std::pair<int, int>>& directions) {
    std::vector<std::uint8_t> flags(static_cast<size_t>(g.edge_count()), 0);
    std::vector<char> assigned(static_cast<size_t>(g.edge_count()), 0);
    for (auto [t, h] : directions) {
        int e = g.edge_index(t, h);
        if (e < 0)
            throw std::invalid_argument("orient: (" + std::to_string(t) + "," +
                                        std::to_string(h) + ") is not an edge");
        if (assigned[e])
            throw std::invalid_argument("orient: duplicate direction for edge (" +
                                        std::to_string(t) + "," + std::to_string(h) + ")");
        assigned[e] = 1;
        flags[e] = (t > h) ? 1 : 0;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!assigned[e]) {
            auto [u, v] = g.edge(e);
            throw std::invalid_argument("orient: missing direction for edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        }
    return Orientation(g, std::move(flags));
}

std::variant<std::vector<int>, CycleWitness> is_acyclic(const Orientation& o) {
    const int n = o.base().vertex_count();
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(o.in_neighbors(v).size());

    std::vector<char> removed(static_cast<size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    // Ascending-vertex Kahn: repeatedly take the smallest zero-indegree
    // vertex, which keeps the order deterministic.
    while (static_cast<int>(order.size()) < n) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && indeg[v] == 0) {
                pick = v;
                break;
            }
        if (pick == -1) break;  // remainder is covered by at least one cycle
        removed[pick] = 1;
        order.push_back(pick);
        for (int w : o.out_neighbors(pick)) --indeg[w];
    }
    if (static_cast<int>(order.size()) == n) return order;

    // Every remaining vertex has an unremoved in-neighbor, so walking
    // predecessors (smallest first) must revisit a vertex; the revisited
    // segment, reversed, is a directed cycle.
    int start = 0;
    while (removed[start]) ++start;
    std::vector<int> walk{start};
    std::vector<int> seen_at(static_cast<size_t>(n), -1);
    seen_at[start] = 0;
    for (;;) {
        int cur = walk.back();
        int prev = -1;
        for (int p : o.in_neighbors(cur))
            if (!removed[p]) {
                prev = p;
                break;
            }
        if (seen_at[prev] >= 0) {
            std::vector<int> cycle(walk.begin() + seen_at[prev], walk.end());
            std::reverse(cycle.begin(), cycle.end());
            // rotate so the smallest vertex leads, then close the walk
            auto mn = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), mn, cycle.end());
            cycle.push_back(cycle.front());
            return CycleWitness{std::move(cycle)};
        }
        seen_at[prev] = static_cast<int>(walk.size());
        walk.push_back(prev);
    }
}

namespace {

// (path length, path sequence, violation) ordering for shortcut witnesses.
bool witness_less(const ShortcutWitness& a, const ShortcutWitness& b) {
    if (a.path.size() != b.path.size()) return a.path.size() < b.path.size();
    if (a.path != b.path) return a.path < b.path;
    return a.violation < b.violation;
}

struct PathEnumerator {
    const Orientation& o;
    long long budget;
    long long enumerated = 0;
    std::vector<int> path;
    std::vector<char> on_path;
    std::optional<ShortcutWitness> best;

    explicit PathEnumerator(const Orientation& o_, long long budget_)
        : o(o_), budget(budget_), on_path(static_cast<size_t>(o_.base().vertex_count()), 0) {}

    void check_current() {
        if (path.size() < 4) return;  // a shortcut needs at least 4 vertices
        int u = path.front(), v = path.back();
        if (!o.base().adjacent(u, v)) return;
        // The orientation is acyclic here, so an edge between the endpoints
        // of a directed path can only point forward.
        for (size_t i = 0; i + 1 < path.size(); ++i)
            for (size_t j = i + 1; j < path.size(); ++j)
                if (!o.is_arc(path[i], path[j])) {
                    ShortcutWitness w{path, {u, v}, {path[i], path[j]}};
                    if (!best || witness_less(w, *best)) best = std::move(w);
                    return;  // first missing pair in position order
                }
    }

    void extend() {
        int cur = path.back();
        for (int w : o.out_neighbors(cur)) {
            if (on_path[w]) continue;  // only possible when a cycle slipped through
            if (++enumerated > budget)
                throw ResourceLimitError(
                    "check_semi_transitive_reference: path budget exceeded (" +
                    std::to_string(budget) + ")");
            path.push_back(w);
            on_path[w] = 1;
            check_current();
            // Extensions are strictly longer; they cannot improve on a
            // witness of the current length, and equal-length paths seen
            // later are lexicographically larger.
            if (!best || path.size() + 1 <= best->path.size()) extend();
            on_path[w] = 0;
            path.pop_back();
        }
    }
};

}  // namespace

Verdict check_semi_transitive_reference(const Orientation& o, long long path_budget) {
    auto acyclic = is_acyclic(o);
    if (auto* cyc = std::get_if<CycleWitness>(&acyclic)) return Verdict::cyclic(*cyc);

    PathEnumerator en(o, path_budget);
    const int n = o.base().vertex_count();
    for (int s = 0; s < n; ++s) {
        en.path.assign(1, s);
        en.on_path.assign(static_cast<size_t>(n), 0);
        en.on_path[s] = 1;
        en.extend();
    }
    if (en.best) return Verdict::has_shortcut(std::move(*en.best));
    return Verdict::ok();
}

namespace {

// BFS over arcs; dist[w] = arc count of a shortest directed path from s.
void directed_bfs(const Orientation& o, int s, std::vector<int>& dist) {
    const int n = o.base().vertex_count();
    dist.assign(static_cast<size_t>(n), -1);
    dist[s] = 0;
    std::vector<int> frontier{s};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int y : o.out_neighbors(x))
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    next.push_back(y);
                }
        frontier = std::move(next);
    }
}

// Lexicographically smallest shortest directed path from x to y, appended
// to `out` excluding x itself.
void append_lex_shortest(const Orientation& o, const std::vector<std::vector<int>>& dist,
                         int x, int y, std::vector<int>& out) {
    while (x != y) {
        for (int z : o.out_neighbors(x)) {
            if (dist[z][y] == dist[x][y] - 1) {
                out.push_back(z);
                x = z;
                break;
            }
        }
    }
}

}  // namespace

Verdict check_semi_transitive(const Orientation& o) {
    auto acyclic = is_acyclic(o);
    if (auto* cyc = std::get_if<CycleWitness>(&acyclic)) return Verdict::cyclic(*cyc);
    const auto& topo = std::get<std::vector<int>>(acyclic);

    const Graph& g = o.base();
    const int n = g.vertex_count();
    const int words = (n + 63) / 64;

    // Strict forward/backward reachability closures over the DAG.
    detail::BitRows fwd, bwd;
    fwd.reset(n);
    bwd.reset(n);
    for (int i = n - 1; i >= 0; --i) {
        int x = topo[i];
        for (int y : o.out_neighbors(x)) {
            fwd.set(x, y);
            fwd.or_into(x, y);
        }
    }
    for (int i = 0; i < n; ++i) {
        int x = topo[i];
        for (int y : o.in_neighbors(x)) {
            bwd.set(x, y);
            bwd.or_into(x, y);
        }
    }

    // Candidate sandwich pairs, minimized by reconstructed witness order.
    std::vector<std::vector<int>> dist(static_cast<size_t>(n));
    bool have_dist = false;
    std::optional<ShortcutWitness> best;

    std::vector<std::uint64_t> amask(static_cast<size_t>(words));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = o.arc(e);
        for (int a = 0; a < n; ++a) {
            if (a != u && !fwd.test(u, a)) continue;
            // b: reachable from a, reaches v (or is v), not adjacent to a
            const auto adj_a = g.adjacency_row(a);
            const auto* fa = fwd.row(a);
            const auto* bv = bwd.row(v);
            for (int w = 0; w < words; ++w) {
                std::uint64_t m = fa[w] & ~adj_a[w];
                std::uint64_t targets = bv[w];
                if (v / 64 == w) targets |= std::uint64_t{1} << (v % 64);
                m &= targets;
                if (a / 64 == w) m &= ~(std::uint64_t{1} << (a % 64));
                amask[w] = m;
            }
            detail::for_each_bit(amask.data(), words, [&](int b) {
                if (!have_dist) {
                    for (int s = 0; s < n; ++s) directed_bfs(o, s, dist[s]);
                    have_dist = true;
                }
                ShortcutWitness w;
                w.shortcut_edge = {u, v};
                w.violation = {a, b};
                w.path.push_back(u);
                append_lex_shortest(o, dist, u, a, w.path);
                append_lex_shortest(o, dist, a, b, w.path);
                append_lex_shortest(o, dist, b, v, w.path);
                if (!best || witness_less(w, *best)) best = std::move(w);
            });
        }
    }
    if (best) return Verdict::has_shortcut(std::move(*best));
    return Verdict::ok();
}

bool replay_witness(const Orientation& o, const Verdict& verdict) {
    switch (verdict.kind) {
        case Verdict::Kind::SemiTransitive:
            return true;  // no claims to replay
        case Verdict::Kind::Cyclic: {
            if (!verdict.cycle) return false;
            const auto& c = verdict.cycle->cycle;
            if (c.size() < 4 || c.front() != c.back()) return false;
            for (size_t i = 0; i + 1 < c.size(); ++i)
                if (!o.is_arc(c[i], c[i + 1])) return false;
            return true;
        }
        case Verdict::Kind::HasShortcut: {
            if (!verdict.shortcut) return false;
            const auto& w = *verdict.shortcut;
            if (w.path.size() < 4) return false;
            std::vector<int> sorted = w.path;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            for (size_t i = 0; i + 1 < w.path.size(); ++i)
                if (!o.is_arc(w.path[i], w.path[i + 1])) return false;
            if (w.shortcut_edge != std::pair{w.path.front(), w.path.back()}) return false;
            if (!o.is_arc(w.shortcut_edge.first, w.shortcut_edge.second)) return false;
            auto pos = [&](int v) {
                auto it = std::find(w.path.begin(), w.path.end(), v);
                return it == w.path.end() ? -1 : static_cast<int>(it - w.path.begin());
            };
            int pa = pos(w.violation.first), pb = pos(w.violation.second);
            if (pa < 0 || pb < 0 || pa >= pb) return false;
            if (o.base().adjacent(w.violation.first, w.violation.second)) return false;
            return true;
        }
    }
    return false;
}

}  // namespace semitrans
