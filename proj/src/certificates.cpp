#include "semitrans/certificates.hpp"

#include <algorithm>
#include <string>

namespace semitrans {

Orientation bipartite_mycielski_orientation(const Graph& g, const Bipartition& parts,
                                            TailPart tail) {
    const int n = g.vertex_count();
    std::vector<int8_t> side(static_cast<size_t>(n), -1);
    auto assign_side = [&](const std::vector<int>& vs, int8_t s) {
        for (int v : vs) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("bipartite_mycielski_orientation: vertex " +
                                            std::to_string(v) + " out of range");
            if (side[v] != -1)
                throw std::invalid_argument(
                    "bipartite_mycielski_orientation: parts are not disjoint");
            side[v] = s;
        }
    };
    assign_side(parts.part_a, 0);
    assign_side(parts.part_b, 1);
    for (int v = 0; v < n; ++v)
        if (side[v] == -1)
            throw std::invalid_argument(
                "bipartite_mycielski_orientation: parts do not cover all vertices");
    for (auto [u, v] : g.edges())
        if (side[u] == side[v])
            throw std::invalid_argument(
                "bipartite_mycielski_orientation: edge inside one part");

    const int8_t tail_side = (tail == TailPart::PartA) ? 0 : 1;
    LabeledGraph mu = mycielski(g);
    std::vector<std::pair<int, int>> dirs;
    dirs.reserve(static_cast<size_t>(mu.graph.edge_count()));
    for (auto [u, v] : g.edges()) {
        if (side[u] == tail_side)
            dirs.emplace_back(u, v);
        else
            dirs.emplace_back(v, u);
    }
    for (auto [u, v] : g.edges()) {
        dirs.emplace_back(u, mu.shadow_vertex(v));  // originals point into shadows
        dirs.emplace_back(v, mu.shadow_vertex(u));
    }
    for (int i = 0; i < n; ++i) dirs.emplace_back(mu.apex_vertex(), mu.shadow_vertex(i));
    return orient(mu.graph, dirs);
}

namespace {

// Recovers the base cycle length when o orients mycielski(make_cycle(nc)),
// throwing otherwise.
int cycle_mycielski_size(const Orientation& o) {
    const int total = o.base().vertex_count();
    if (total < 7 || total % 2 == 0)
        throw std::invalid_argument("color_cycle: base is not the Mycielski graph of a cycle");
    const int nc = (total - 1) / 2;
    if (!(o.base() == mycielski(make_cycle(nc)).graph))
        throw std::invalid_argument("color_cycle: base is not the Mycielski graph of a cycle");
    return nc;
}

}  // namespace

ColoringResult color_cycle(const Orientation& o) {
    const int nc = cycle_mycielski_size(o);
    const int apex = 2 * nc;
    if (!o.in_neighbors(apex).empty())
        throw std::invalid_argument("color_cycle: apex is not a source");

    CycleColoring coloring;
    coloring.cycle_length = nc;
    coloring.colors.resize(static_cast<size_t>(nc));
    for (int i = 0; i < nc; ++i) {
        const int prev_shadow = nc + (i + nc - 1) % nc;
        const int next_shadow = nc + (i + 1) % nc;
        const bool prev_in = o.is_arc(prev_shadow, i);
        const bool next_in = o.is_arc(next_shadow, i);
        if (prev_in && next_in) {
            coloring.colors[i] = PatternColor::Red;
        } else if (!prev_in && !next_in) {
            coloring.colors[i] = PatternColor::Blue;
        } else {
            MixedDirectionViolation v;
            v.vertex = i;
            v.arc_in = prev_in ? std::pair{prev_shadow, i} : std::pair{next_shadow, i};
            v.arc_out = prev_in ? std::pair{i, next_shadow} : std::pair{i, prev_shadow};
            return v;
        }
    }
    return coloring;
}

PatternDecomposition pattern_decomposition(const CycleColoring& coloring) {
    const int nc = coloring.cycle_length;
    std::vector<std::pair<PatternColor, int>> runs;
    for (int i = 0; i < nc; ++i) {
        if (!runs.empty() && runs.back().first == coloring.colors[i])
            ++runs.back().second;
        else
            runs.emplace_back(coloring.colors[i], 1);
    }
    // merge the wrap-around run
    if (runs.size() >= 2 && runs.front().first == runs.back().first) {
        runs.front().second += runs.back().second;
        runs.pop_back();
    }
    // canonical starting rotation: lexicographically smallest run sequence
    if (runs.size() >= 2) {
        auto key = [](const std::pair<PatternColor, int>& r) {
            return std::pair<int, int>{r.first == PatternColor::Blue ? 0 : 1, r.second};
        };
        size_t best = 0;
        for (size_t s = 1; s < runs.size(); ++s) {
            for (size_t k = 0; k < runs.size(); ++k) {
                auto cand = key(runs[(s + k) % runs.size()]);
                auto cur = key(runs[(best + k) % runs.size()]);
                if (cand != cur) {
                    if (cand < cur) best = s;
                    break;
                }
            }
        }
        std::rotate(runs.begin(), runs.begin() + static_cast<long>(best), runs.end());
    }
    return PatternDecomposition{std::move(runs)};
}

ColoringPropertyReport check_coloring_properties(const Orientation& o,
                                                 const CycleColoring& coloring) {
    const int nc = coloring.cycle_length;
    const auto& col = coloring.colors;
    ColoringPropertyReport report;

    for (int i = 0; i < nc; ++i) {
        const int j = (i + 1) % nc;
        if (col[i] == col[j]) continue;
        const int blue = (col[i] == PatternColor::Blue) ? i : j;
        const int red = blue == i ? j : i;
        if (!o.is_arc(blue, red)) {
            report.blue_to_red_edges.pass = false;
            report.blue_to_red_edges.violations.push_back(i);
        }
    }

    for (int i = 0; i < nc; ++i) {
        const int mid = (i + 1) % nc;
        const int end = (i + 2) % nc;
        if (o.is_arc(i, mid) && o.is_arc(mid, end)) {
            if (col[i] != PatternColor::Blue || col[end] != PatternColor::Red) {
                report.two_path_forward.pass = false;
                report.two_path_forward.violations.push_back(i);
            }
        }
        if (o.is_arc(end, mid) && o.is_arc(mid, i)) {
            if (col[end] != PatternColor::Blue || col[i] != PatternColor::Red) {
                report.two_path_backward.pass = false;
                report.two_path_backward.violations.push_back(i);
            }
        }
    }

    const auto decomposition = pattern_decomposition(coloring);
    if (decomposition.runs.size() >= 2) {
        for (size_t r = 0; r < decomposition.runs.size(); ++r) {
            if (decomposition.runs[r].second % 2 == 0) {
                report.odd_runs.pass = false;
                report.odd_runs.violations.push_back(static_cast<int>(r));
            }
        }
    }
    return report;
}

ParityVerdict parity_argument(const PatternDecomposition& decomposition) {
    long long total = 0;
    bool all_odd = true;
    for (auto [color, len] : decomposition.runs) {
        total += len;
        if (len % 2 == 0) all_odd = false;
    }
    const bool even_count = decomposition.runs.size() % 2 == 0;
    const bool even_total = total % 2 == 0;
    return (even_count && all_odd && even_total) ? ParityVerdict::Consistent
                                                 : ParityVerdict::Inconsistent;
}

OddCycleWitness induced_odd_cycle(const Graph& g, const OddCycleWitness& witness) {
    std::vector<int> cycle = witness.cycle;
    const auto validate = [&](const std::vector<int>& c) {
        if (c.size() < 3 || c.size() % 2 == 0) return false;
        std::vector<int> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        for (int v : c)
            if (v < 0 || v >= g.vertex_count()) return false;
        for (size_t i = 0; i < c.size(); ++i)
            if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
        return true;
    };
    if (!validate(cycle))
        throw std::invalid_argument("induced_odd_cycle: witness is not a valid odd cycle");

    for (;;) {
        const int len = static_cast<int>(cycle.size());
        bool shrunk = false;
        for (int i = 0; i < len && !shrunk; ++i) {
            for (int j = i + 2; j < len; ++j) {
                if (i == 0 && j == len - 1) continue;  // cycle edge, not a chord
                if (!g.adjacent(cycle[i], cycle[j])) continue;
                // The chord splits the cycle into pieces of i..j and
                // j..i (wrapping); their sizes differ in parity, keep odd.
                std::vector<int> piece(cycle.begin() + i, cycle.begin() + j + 1);
                if (piece.size() % 2 == 0) {
                    piece.assign(cycle.begin() + j, cycle.end());
                    piece.insert(piece.end(), cycle.begin(), cycle.begin() + i + 1);
                }
                cycle = std::move(piece);
                shrunk = true;
                break;
            }
        }
        if (!shrunk) return OddCycleWitness{std::move(cycle)};
    }
}

}  // namespace semitrans
