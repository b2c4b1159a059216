#ifndef SEMITRANS_CERTIFICATES_HPP
#define SEMITRANS_CERTIFICATES_HPP

#include <utility>
#include <variant>
#include <vector>

#include "semitrans/mycielski.hpp"
#include "semitrans/orientation.hpp"

namespace semitrans {

enum class PatternColor { Blue, Red };  // Blue orders before Red

/// Which side of the bipartition every base edge is oriented away from in
/// bipartite_mycielski_orientation.
enum class TailPart { PartA, PartB };

/// Explicit semi-transitive orientation of mycielski(g) for bipartite g:
/// every base edge directed tail-part to head-part, apex -> every shadow,
/// and every cross edge original -> shadow. The longest directed path has
/// length at most 2, which rules out shortcuts outright. Throws
/// std::invalid_argument when parts is not a valid bipartition of g.
Orientation bipartite_mycielski_orientation(const Graph& g, const Bipartition& parts,
                                            TailPart tail = TailPart::PartA);

/// Red/blue classification of the base-cycle vertices of an apex-source
/// orientation of mycielski(make_cycle(n)). Vertex i is Red when both
/// incident shadow edges (i-1)' and (i+1)' point into i, Blue when both
/// point out of i.
struct CycleColoring {
    int cycle_length = 0;
    std::vector<PatternColor> colors;
};

/// A cycle vertex whose two shadow edges disagree in direction. Such a
/// vertex cannot occur in a semi-transitive apex-source orientation: the
/// mixed configuration closes a shortcut through the apex.
struct MixedDirectionViolation {
    int vertex = -1;
    std::pair<int, int> arc_in;   // the shadow arc pointing into vertex
    std::pair<int, int> arc_out;  // the arc from vertex to its other shadow
};

using ColoringResult = std::variant<CycleColoring, MixedDirectionViolation>;

/// Colors the base cycle of o. Requires o to be an orientation of
/// mycielski(make_cycle(n)) for some n >= 3 with the apex a source;
/// anything else throws std::invalid_argument. A mixed-direction vertex is
/// returned as data, not thrown.
ColoringResult color_cycle(const Orientation& o);

/// Circular run-length decomposition of a cycle coloring, stored from the
/// canonical starting rotation (lexicographically smallest run sequence,
/// Blue before Red). Run lengths sum to the cycle length and colors of
/// adjacent runs alternate whenever there are at least two runs.
struct PatternDecomposition {
    std::vector<std::pair<PatternColor, int>> runs;
};

PatternDecomposition pattern_decomposition(const CycleColoring& coloring);

/// Structural facts of a coloring obtained from a semi-transitive
/// apex-source orientation, each verified directly on the cycle:
///  (1) every bichromatic cycle edge is directed Blue -> Red;
///  (2) on every directed 2-path along the cycle the first vertex is Blue
///      and the last is Red (forward and mirrored traversal reported
///      separately);
///  (3) every maximal monochromatic run has odd length, provided the
///      decomposition has at least two runs. Equivalently: same-colored
///      vertices i and i+m flanking an opposite-colored stretch sit at an
///      even distance m, since the stretch is a run of length m-1.
struct ColoringPropertyReport {
    struct Property {
        bool pass = true;
        std::vector<int> violations;  // vertex index / run ordinal witnesses
    };
    Property blue_to_red_edges;       // (1)
    Property two_path_forward;        // (2), i -> i+1 -> i+2
    Property two_path_backward;       // (2) mirrored, i+2 -> i+1 -> i
    Property odd_runs;                // (3)

    bool all_pass() const noexcept {
        return blue_to_red_edges.pass && two_path_forward.pass && two_path_backward.pass &&
               odd_runs.pass;
    }
};

ColoringPropertyReport check_coloring_properties(const Orientation& o,
                                                 const CycleColoring& coloring);

enum class ParityVerdict { Consistent, Inconsistent };

/// Parity accounting over a decomposition: Consistent iff the number of
/// runs is even, every run length is odd, and the lengths sum to an even
/// total. An odd cycle length therefore always comes out Inconsistent —
/// the arithmetic obstruction surfaced as data.
ParityVerdict parity_argument(const PatternDecomposition& decomposition);

/// Shrinks a valid odd-cycle witness across chords until chordless: a
/// chord splits an odd cycle into an odd and an even piece, and the odd
/// piece is again a cycle. Returns the resulting induced odd cycle.
/// Throws std::invalid_argument when the witness does not replay on g.
OddCycleWitness induced_odd_cycle(const Graph& g, const OddCycleWitness& witness);

}  // namespace semitrans

#endif  // SEMITRANS_CERTIFICATES_HPP
