#ifndef SEMITRANS_MYCIELSKI_HPP
#define SEMITRANS_MYCIELSKI_HPP

#include "semitrans/graph.hpp"

namespace semitrans {

/// Role of a vertex in a Mycielski-type construction over a base graph on
/// n vertices. Index layout: Original(i) = i, Shadow(i) = n + i, Apex = 2n.
struct MycielskiLabel {
    enum class Role { Original, Shadow, Apex };

    Role role = Role::Apex;
    int base_vertex = -1;  // -1 iff Apex

    static MycielskiLabel original(int i) { return {Role::Original, i}; }
    static MycielskiLabel shadow(int i) { return {Role::Shadow, i}; }
    static MycielskiLabel apex() { return {Role::Apex, -1}; }

    bool operator==(const MycielskiLabel&) const = default;
};

/// A graph produced by mycielski() / extended_mycielski(), carrying the
/// base size so vertex roles can be decoded in constant time.
struct LabeledGraph {
    Graph graph;
    int base_n = 0;

    int apex_vertex() const noexcept { return 2 * base_n; }
    int shadow_vertex(int base_i) const;

    /// Role of μ-vertex v. Throws std::invalid_argument when out of range.
    MycielskiLabel label_of(int v) const;
    /// Inverse of label_of. Throws std::invalid_argument on labels that do
    /// not fit base_n.
    int index_of(const MycielskiLabel& label) const;
};

/// Mycielski graph of g: the base graph, a shadow vertex per base vertex
/// adjacent to that vertex's base neighbors, and an apex adjacent to every
/// shadow. 2n+1 vertices, 3m+n edges.
LabeledGraph mycielski(const Graph& g);

/// Extended Mycielski graph: mycielski(g) plus an edge from every shadow i'
/// to every original j != i. 2n+1 vertices, m + n(n-1) + n edges.
LabeledGraph extended_mycielski(const Graph& g);

}  // namespace semitrans

#endif  // SEMITRANS_MYCIELSKI_HPP
