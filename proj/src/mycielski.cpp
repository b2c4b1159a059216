#include "semitrans/mycielski.hpp"

#include <string>

namespace semitrans {

int LabeledGraph::shadow_vertex(int base_i) const {
    if (base_i < 0 || base_i >= base_n)
        throw std::invalid_argument("shadow_vertex: base vertex out of range");
    return base_n + base_i;
}

MycielskiLabel LabeledGraph::label_of(int v) const {
    if (v < 0 || v > 2 * base_n)
        throw std::invalid_argument("label_of: vertex " + std::to_string(v) + " out of range");
    if (v < base_n) return MycielskiLabel::original(v);
    if (v < 2 * base_n) return MycielskiLabel::shadow(v - base_n);
    return MycielskiLabel::apex();
}

int LabeledGraph::index_of(const MycielskiLabel& label) const {
    switch (label.role) {
        case MycielskiLabel::Role::Original:
            if (label.base_vertex < 0 || label.base_vertex >= base_n)
                throw std::invalid_argument("index_of: original label out of range");
            return label.base_vertex;
        case MycielskiLabel::Role::Shadow:
            if (label.base_vertex < 0 || label.base_vertex >= base_n)
                throw std::invalid_argument("index_of: shadow label out of range");
            return base_n + label.base_vertex;
        case MycielskiLabel::Role::Apex:
            return 2 * base_n;
    }
    throw std::invalid_argument("index_of: invalid label");
}

LabeledGraph mycielski(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(3) * g.edge_count() + n);
    for (auto [u, v] : g.edges()) {
        es.emplace_back(u, v);          // base edge
        es.emplace_back(u, n + v);      // u - v'
        es.emplace_back(v, n + u);      // v - u'
    }
    for (int i = 0; i < n; ++i) es.emplace_back(n + i, 2 * n);  // i' - apex
    return LabeledGraph{Graph(2 * n + 1, std::move(es)), n};
}

LabeledGraph extended_mycielski(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.emplace_back(u, v);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i) es.emplace_back(j, n + i);  // every shadow i' to every original j != i
    for (int i = 0; i < n; ++i) es.emplace_back(n + i, 2 * n);
    return LabeledGraph{Graph(2 * n + 1, std::move(es)), n};
}

}  // namespace semitrans
