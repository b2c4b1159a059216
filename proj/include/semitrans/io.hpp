#ifndef SEMITRANS_IO_HPP
#define SEMITRANS_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "semitrans/graph.hpp"
#include "semitrans/orientation.hpp"

namespace semitrans {

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// The writer emits edges sorted lexicographically. Parse errors throw
// std::invalid_argument with a line reference.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Orientation text format: the edge-list section followed by one line
// "orient: u>v" per edge. Directions must cover every edge exactly once.
Orientation read_orientation(std::istream& in);
Orientation read_orientation_file(const std::string& path);
void write_orientation(std::ostream& out, const Orientation& o);
void write_orientation_file(const std::string& path, const Orientation& o);

nlohmann::json verdict_to_json(const Verdict& v);

/// DOT text. Directed when an orientation is supplied. When
/// mycielski_base_n is given (graph must have 2*base_n+1 vertices), nodes
/// carry role attributes and original/shadow/apex rank groups mirroring the
/// three-layer drawing convention.
std::string to_dot(const Graph& g, const Orientation* o = nullptr,
                   std::optional<int> mycielski_base_n = std::nullopt);

}  // namespace semitrans

#endif  // SEMITRANS_IO_HPP
