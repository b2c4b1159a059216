#include "semitrans/solver.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "bitrows.hpp"

namespace semitrans {

namespace {

using detail::BitRows;

// True iff some arc (u,v) admits a sandwich pair (a,b): u reaches a (or
// a==u), b reaches v (or b==v), a reaches b by a nonempty path, and a,b are
// non-adjacent in the base graph. fwd/bwd are strict reachability closures
// over the currently oriented arcs.
bool closure_has_shortcut(const Graph& g, const std::vector<std::pair<int, int>>& arcs,
                          const BitRows& fwd, const BitRows& bwd) {
    const int n = g.vertex_count();
    const int words = (n + 63) / 64;
    for (auto [u, v] : arcs) {
        for (int a = 0; a < n; ++a) {
            if (a != u && !fwd.test(u, a)) continue;
            const auto adj_a = g.adjacency_row(a);
            const auto* fa = fwd.row(a);
            const auto* bv = bwd.row(v);
            for (int w = 0; w < words; ++w) {
                std::uint64_t targets = bv[w];
                if (v / 64 == w) targets |= std::uint64_t{1} << (v % 64);
                std::uint64_t m = fa[w] & targets & ~adj_a[w];
                if (a / 64 == w) m &= ~(std::uint64_t{1} << (a % 64));
                if (m) return true;
            }
        }
    }
    return false;
}

// Reusable scratch for deciding semi-transitivity of a full assignment.
struct AssignmentChecker {
    const Graph* g = nullptr;
    int n = 0;
    std::vector<std::vector<int>> out, in;
    std::vector<int> indeg, topo, stack_;
    BitRows fwd, bwd;
    std::vector<std::pair<int, int>> arcs;

    void init(const Graph& graph) {
        g = &graph;
        n = graph.vertex_count();
        out.assign(static_cast<size_t>(n), {});
        in.assign(static_cast<size_t>(n), {});
        indeg.assign(static_cast<size_t>(n), 0);
        fwd.reset(n);
        bwd.reset(n);
        arcs.resize(static_cast<size_t>(graph.edge_count()));
    }

    bool semi_transitive(const std::vector<std::uint8_t>& flags) {
        for (int v = 0; v < n; ++v) {
            out[v].clear();
            in[v].clear();
            indeg[v] = 0;
        }
        for (int e = 0; e < g->edge_count(); ++e) {
            auto [u, v] = g->edge(e);
            if (flags[e]) std::swap(u, v);
            arcs[e] = {u, v};
            out[u].push_back(v);
            in[v].push_back(u);
            ++indeg[v];
        }
        topo.clear();
        stack_.clear();
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0) stack_.push_back(v);
        while (!stack_.empty()) {
            int x = stack_.back();
            stack_.pop_back();
            topo.push_back(x);
            for (int y : out[x])
                if (--indeg[y] == 0) stack_.push_back(y);
        }
        if (static_cast<int>(topo.size()) != n) return false;  // directed cycle

        fwd.clear_rows();
        bwd.clear_rows();
        for (int i = n - 1; i >= 0; --i) {
            int x = topo[i];
            for (int y : out[x]) {
                fwd.set(x, y);
                fwd.or_into(x, y);
            }
        }
        for (int i = 0; i < n; ++i) {
            int x = topo[i];
            for (int y : in[x]) {
                bwd.set(x, y);
                bwd.or_into(x, y);
            }
        }
        return !closure_has_shortcut(*g, arcs, fwd, bwd);
    }
};

struct ForcedPlan {
    std::vector<std::pair<int, int>> fixed;  // (edge index, flag)
    bool contradictory = false;
};

// Pin the direction of every edge incident to a forced source or sink.
ForcedPlan plan_forced(const Graph& g, const SolveOptions& opts) {
    auto check = [&](int v, const char* what) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument(std::string(what) + " vertex " + std::to_string(v) +
                                        " out of range");
    };
    ForcedPlan plan;
    if (opts.forced_source) check(*opts.forced_source, "forced_source");
    if (opts.forced_sink) check(*opts.forced_sink, "forced_sink");
    if (opts.forced_source && opts.forced_sink && *opts.forced_source == *opts.forced_sink &&
        g.degree(*opts.forced_source) > 0) {
        plan.contradictory = true;
        return plan;
    }
    std::vector<int8_t> want(static_cast<size_t>(g.edge_count()), -1);
    if (opts.forced_source) {
        int s = *opts.forced_source;
        for (int w : g.neighbors(s)) {
            int e = g.edge_index(s, w);
            want[e] = (s < w) ? 0 : 1;  // orient s -> w
        }
    }
    if (opts.forced_sink) {
        int t = *opts.forced_sink;
        for (int w : g.neighbors(t)) {
            int e = g.edge_index(t, w);
            int8_t f = (w < t) ? 0 : 1;  // orient w -> t
            if (want[e] != -1 && want[e] != f) {
                plan.contradictory = true;
                return plan;
            }
            want[e] = f;
        }
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (want[e] != -1) plan.fixed.emplace_back(e, want[e]);
    return plan;
}

std::vector<int> free_edge_order(const Graph& g, const SolveOptions& opts,
                                 const std::vector<std::pair<int, int>>& fixed) {
    std::vector<char> is_fixed(static_cast<size_t>(g.edge_count()), 0);
    for (auto [e, f] : fixed) is_fixed[e] = 1;

    std::vector<int> order;
    if (opts.edge_order) {
        const auto& perm = *opts.edge_order;
        std::vector<char> seen(static_cast<size_t>(g.edge_count()), 0);
        if (static_cast<int>(perm.size()) != g.edge_count())
            throw std::invalid_argument("edge_order: must be a permutation of all edges");
        for (int e : perm) {
            if (e < 0 || e >= g.edge_count() || seen[e])
                throw std::invalid_argument("edge_order: must be a permutation of all edges");
            seen[e] = 1;
            if (!is_fixed[e]) order.push_back(e);
        }
        return order;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!is_fixed[e]) order.push_back(e);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto [au, av] = g.edge(a);
        auto [bu, bv] = g.edge(b);
        int da = g.degree(au) + g.degree(av);
        int db = g.degree(bu) + g.degree(bv);
        if (da != db) return da > db;
        return a < b;
    });
    return order;
}

// Backtracking search state: oriented arc lists, a Pearce-Kelly maintained
// topological order for incremental cycle detection, and closure scratch.
struct Searcher {
    const Graph* g = nullptr;
    int n = 0;

    std::vector<int8_t> dir;  // -1 unset, else toward-high flag
    std::vector<std::vector<int>> out, in;
    std::vector<std::pair<int, int>> arcs;  // currently oriented arcs (stack)
    std::vector<int> ord, vert_at;
    BitRows fwd, bwd;
    std::vector<int> dfs_stack, f_set, b_set;
    std::vector<char> mark;
    SearchStats stats;

    struct PkUndo {
        std::vector<std::pair<int, int>> moved;  // (vertex, previous position)
    };

    void init(const Graph& graph) {
        g = &graph;
        n = graph.vertex_count();
        dir.assign(static_cast<size_t>(graph.edge_count()), -1);
        out.assign(static_cast<size_t>(n), {});
        in.assign(static_cast<size_t>(n), {});
        ord.resize(static_cast<size_t>(n));
        vert_at.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) ord[v] = vert_at[v] = v;
        fwd.reset(n);
        bwd.reset(n);
        mark.assign(static_cast<size_t>(n), 0);
    }

    // Inserts arc u->v into the maintained topological order, reordering
    // the affected window. Returns false (state untouched) when the arc
    // closes a directed cycle. Any path between two vertices stays inside
    // their position window, so the windowed searches are exhaustive.
    bool pk_add_arc(int u, int v, PkUndo& undo) {
        if (ord[u] < ord[v]) return true;
        const int lb = ord[v], ub = ord[u];

        f_set.clear();
        dfs_stack.assign(1, v);
        mark[v] = 1;
        bool cycle = false;
        while (!dfs_stack.empty()) {
            int x = dfs_stack.back();
            dfs_stack.pop_back();
            f_set.push_back(x);
            if (x == u) {
                cycle = true;
                break;
            }
            for (int y : out[x])
                if (!mark[y] && ord[y] <= ub) {
                    mark[y] = 1;
                    dfs_stack.push_back(y);
                }
        }
        if (cycle) {
            for (int x : f_set) mark[x] = 0;
            for (int x : dfs_stack) mark[x] = 0;
            return false;
        }

        // A forward-marked vertex cannot also reach u: that would have
        // certified a cycle above. Skipping marks of either kind is safe.
        b_set.clear();
        dfs_stack.assign(1, u);
        mark[u] = 2;
        while (!dfs_stack.empty()) {
            int x = dfs_stack.back();
            dfs_stack.pop_back();
            b_set.push_back(x);
            for (int y : in[x])
                if (!mark[y] && ord[y] >= lb) {
                    mark[y] = 2;
                    dfs_stack.push_back(y);
                }
        }

        auto by_pos = [&](int a, int b) { return ord[a] < ord[b]; };
        std::sort(f_set.begin(), f_set.end(), by_pos);
        std::sort(b_set.begin(), b_set.end(), by_pos);

        std::vector<int> pool;
        pool.reserve(f_set.size() + b_set.size());
        for (int x : b_set) pool.push_back(ord[x]);
        for (int x : f_set) pool.push_back(ord[x]);
        std::sort(pool.begin(), pool.end());

        size_t idx = 0;
        auto place = [&](int x) {
            undo.moved.emplace_back(x, ord[x]);
            ord[x] = pool[idx];
            vert_at[pool[idx]] = x;
            ++idx;
        };
        for (int x : b_set) place(x);
        for (int x : f_set) place(x);
        for (int x : f_set) mark[x] = 0;
        for (int x : b_set) mark[x] = 0;
        return true;
    }

    void pk_undo(const PkUndo& undo) {
        for (auto [x, pos] : undo.moved) {
            ord[x] = pos;
            vert_at[pos] = x;
        }
    }

    void push_arc(int e, int d) {
        auto [u, v] = g->edge(e);
        if (d) std::swap(u, v);
        dir[e] = static_cast<int8_t>(d);
        out[u].push_back(v);
        in[v].push_back(u);
        arcs.emplace_back(u, v);
    }

    void pop_arc(int e) {
        auto [u, v] = arcs.back();
        arcs.pop_back();
        dir[e] = -1;
        out[u].pop_back();
        in[v].pop_back();
    }

    void recompute_closures() {
        fwd.clear_rows();
        bwd.clear_rows();
        for (int i = n - 1; i >= 0; --i) {
            int x = vert_at[i];
            for (int y : out[x]) {
                fwd.set(x, y);
                fwd.or_into(x, y);
            }
        }
        for (int i = 0; i < n; ++i) {
            int x = vert_at[i];
            for (int y : in[x]) {
                bwd.set(x, y);
                bwd.or_into(x, y);
            }
        }
    }

    // Attempts to orient edge e in direction d on top of the current state.
    // Counts the attempt and classifies the prune when it fails.
    bool try_arc(int e, int d, PkUndo& undo) {
        ++stats.nodes;
        auto [u, v] = g->edge(e);
        if (d) std::swap(u, v);
        if (!pk_add_arc(u, v, undo)) {
            ++stats.cycle_prunes;
            return false;
        }
        push_arc(e, d);
        recompute_closures();
        if (closure_has_shortcut(*g, arcs, fwd, bwd)) {
            ++stats.shortcut_prunes;
            pop_arc(e);
            pk_undo(undo);
            return false;
        }
        return true;
    }

    void retract(int e, const PkUndo& undo) {
        pop_arc(e);
        pk_undo(undo);
    }
};

SolveResult finish(const Graph& g, SearchStats stats,
                   const std::optional<std::vector<std::uint8_t>>& flags,
                   std::chrono::steady_clock::time_point t0) {
    SolveResult res;
    res.stats = stats;
    if (flags) res.certificate = Orientation(g, *flags);
    res.stats.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

SolveResult solve_backtracking(const Graph& g, const SolveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    ForcedPlan plan = plan_forced(g, opts);
    SearchStats stats;
    if (plan.contradictory) return finish(g, stats, std::nullopt, t0);

    Searcher s;
    s.init(g);

    // Forced arcs are assigned before the search proper; a cycle or
    // completed shortcut among them alone already refutes the subspace.
    for (auto [e, d] : plan.fixed) {
        Searcher::PkUndo undo;
        auto [u, v] = g.edge(e);
        if (d) std::swap(u, v);
        if (!s.pk_add_arc(u, v, undo)) return finish(g, stats, std::nullopt, t0);
        s.push_arc(e, d);
    }
    s.recompute_closures();
    if (closure_has_shortcut(g, s.arcs, s.fwd, s.bwd)) return finish(g, stats, std::nullopt, t0);

    const std::vector<int> order = free_edge_order(g, opts, plan.fixed);
    std::optional<std::vector<std::uint8_t>> found;

    auto flags_now = [&]() {
        std::vector<std::uint8_t> f(s.dir.size());
        for (size_t i = 0; i < s.dir.size(); ++i) f[i] = static_cast<std::uint8_t>(s.dir[i]);
        return f;
    };

    // Recursive descent over the free edges; low->high tried first.
    auto dfs = [&](auto&& self, size_t depth) -> bool {
        if (depth == order.size()) {
            // Leaf verification with the full checker; incremental pruning
            // should already guarantee this.
            auto f = flags_now();
            if (!check_semi_transitive(Orientation(g, f)).semi_transitive()) return false;
            found = std::move(f);
            return true;
        }
        int e = order[depth];
        for (int d = 0; d < 2; ++d) {
            Searcher::PkUndo undo;
            if (!s.try_arc(e, d, undo)) continue;
            if (self(self, depth + 1)) return true;
            s.retract(e, undo);
        }
        return false;
    };
    dfs(dfs, 0);
    return finish(g, s.stats, found, t0);
}

}  // namespace

SolveResult solve_exhaustive(const Graph& g, const SolveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const int m = g.edge_count();
    if (m > opts.exhaustive_edge_cap)
        throw ResourceLimitError("solve_exhaustive: " + std::to_string(m) +
                                 " edges exceed cap " + std::to_string(opts.exhaustive_edge_cap));

    ForcedPlan plan = plan_forced(g, opts);
    SearchStats stats;
    if (plan.contradictory) return finish(g, stats, std::nullopt, t0);

    std::vector<std::uint8_t> flags(static_cast<size_t>(m), 0);
    std::vector<char> is_fixed(static_cast<size_t>(m), 0);
    for (auto [e, d] : plan.fixed) {
        flags[e] = static_cast<std::uint8_t>(d);
        is_fixed[e] = 1;
    }
    std::vector<int> free_edges;
    for (int e = 0; e < m; ++e)
        if (!is_fixed[e]) free_edges.push_back(e);

    AssignmentChecker checker;
    checker.init(g);

    // Ascending full-mask order; fixed bits stay pinned, so iterating the
    // free bits in edge-index order visits full masks in ascending order.
    const std::uint64_t total = std::uint64_t{1} << free_edges.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (size_t j = 0; j < free_edges.size(); ++j)
            flags[free_edges[j]] = static_cast<std::uint8_t>((mask >> j) & 1);
        ++stats.nodes;
        if (checker.semi_transitive(flags)) {
            Orientation cert(g, flags);
            if (check_semi_transitive(cert).semi_transitive())
                return finish(g, stats, flags, t0);
        }
    }
    return finish(g, stats, std::nullopt, t0);
}

SolveResult solve(const Graph& g, const SolveOptions& opts) {
    if (opts.mode == SolveOptions::Mode::Exhaustive) return solve_exhaustive(g, opts);
    return solve_backtracking(g, opts);
}

SourceTheoremReport verify_source_theorem(const Graph& g) {
    if (!solve(g).sat())
        throw std::invalid_argument("verify_source_theorem: graph is not semi-transitive");
    SourceTheoremReport report;
    for (int v = 0; v < g.vertex_count(); ++v) {
        SolveOptions src, snk;
        src.forced_source = v;
        snk.forced_sink = v;
        bool source_sat = solve(g, src).sat();
        bool sink_sat = solve(g, snk).sat();
        report.entries.push_back({v, source_sat, sink_sat});
        if (!source_sat || !sink_sat) report.violations.push_back(v);
    }
    return report;
}

}  // namespace semitrans
