#pragma once

#include <array>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "icdraw/augment.hpp"
#include "icdraw/contraction.hpp"
#include "icdraw/graph.hpp"

namespace icdraw {

/// Acyclic orientation with one source and one sink plus a topological
/// numbering. Indexed by the edge / vertex ids of the map it belongs to.
struct StOrientation {
    std::vector<int> tail;    // per edge slot, -1 for dead slots
    std::vector<int> number;  // per vertex slot, -1 for absent vertices
    int s = -1;
    int t = -1;

    bool leaves(const PlanarMap& map, int dart) const { return tail[PlanarMap::edge_of(dart)] == map.origin(dart); }
};

enum class CornerKind { None, AllIn, AllOut, Mixed };

/// Order of incoming/outgoing edges at a Mixed corner, walking clockwise
/// from the previous corner's side edge to the next corner's.
enum class Boundary { InThenOut, OutThenIn, InOutIn, OutInOut };

struct CornerPattern {
    CornerKind kind = CornerKind::None;
    Boundary boundary = Boundary::InThenOut;  // meaningful for Mixed only

    friend bool operator==(const CornerPattern&, const CornerPattern&) = default;
};

/// Orientation summary of the edges a contracted kite vertex hands back to
/// each of its corners (a, b, c, d clockwise).
struct ExpansionPattern {
    enum class Role { Inner, Source, Sink, SourceSink };
    std::array<CornerPattern, 4> corners{};
    Role role = Role::Inner;
    /// Corners lying on the outer face; consulted when the kite vertex was
    /// the source or the sink.
    std::array<bool, 4> on_outer_face{true, true, true, true};
};

enum class ExpansionCase { Case1a, Case1b, Case1c, Case2a, Case2b, Case3a, Case3b, SourceSink };
std::string_view to_string(ExpansionCase c);

struct ExpansionDecision {
    int origin = -1;       // corner index
    int destination = -1;  // corner index
    ExpansionCase which = ExpansionCase::Case1a;
};

/// Chooses the origin and destination of a re-expanded kite face so that
/// the graph keeps one source and one sink and the face has one vertex on
/// each side. Throws UnmatchedPattern for non-bipolar patterns.
ExpansionDecision orient_expanded_kite(const ExpansionPattern& pattern);

/// Graph P: the planarization without dummies and crossing edges.
struct SplitResult {
    EmbeddedGraph plane;
    std::vector<int> real_of_edge;
    std::vector<std::array<int, 2>> crossing_pairs;
};

SplitResult split_crossings(const ICPlaneGraph& g, std::span<const KiteRecord> kites);

inline Contraction contract_kite_faces(const EmbeddedGraph& plane, std::span<const KiteRecord> kites) {
    return contract_kites(plane, kites);
}

/// Bipolar orientation of a biconnected plane multigraph. The poles are the
/// endpoints of the lowest-numbered edge on the outer face (first endpoint
/// is the source). Throws NotBiconnected.
StOrientation st_orient(const PlanarMap& map, int outer_dart);

struct ExpansionStats {
    std::map<ExpansionCase, int> cases;
    int invariant_checks = 0;
};

/// Re-expands every contracted kite, orienting its four sides. Checks
/// single source/sink and the two-path face shape after each expansion;
/// throws InvariantViolated on failure. Fills origin/destination of kites.
StOrientation expand_all(const EmbeddedGraph& plane, const Contraction& contracted, const StOrientation& contracted_orient,
                         std::vector<KiteRecord>& kites, ExpansionStats* stats = nullptr);

/// Pattern seen by kite k under the orientation of the contracted graph.
ExpansionPattern expansion_pattern(const EmbeddedGraph& plane, const Contraction& contracted,
                                   const StOrientation& contracted_orient, const KiteRecord& kite, int kite_index);

struct PlusGraph {
    EmbeddedGraph graph;
    StOrientation orientation;
    std::vector<int> real_of_edge;
};

/// Inserts each kite's origin-destination diagonal into its face and fills
/// the left/right roles.
PlusGraph reinsert_diagonals(const EmbeddedGraph& plane, const StOrientation& orientation,
                             std::span<const int> real_of_edge, std::vector<KiteRecord>& kites);

/// Longest-path numbering from the unique source; -1 entries for absent
/// vertices. Throws InvariantViolated if the orientation has a cycle.
std::vector<int> longest_path_numbering(const PlanarMap& map, std::span<const int> tail);

struct OrientResult {
    SplitResult split;
    Contraction contracted;
    StOrientation contracted_orientation;
    StOrientation plane_orientation;
    PlusGraph plus;
    std::vector<KiteRecord> kites;
    ExpansionStats stats;
};

OrientResult orient(const ICPlaneGraph& augmented, std::vector<KiteRecord> kites);

}  // namespace icdraw
