#pragma once

#include <span>
#include <vector>

#include "icdraw/augment.hpp"
#include "icdraw/planar_map.hpp"

namespace icdraw {

/// Plane multigraph obtained by collapsing every kite to one node whose
/// rotation is the boundary-walk order of the corners' outside edges.
struct Contraction {
    PlanarMap map;
    /// Source vertex -> node (-1 for dummies and removed vertices).
    std::vector<int> node_of;
    /// Node -> source vertex, -1 for kite nodes.
    std::vector<int> vertex_of_node;
    /// Node -> kite index, -1 for ordinary nodes.
    std::vector<int> kite_of_node;
    std::vector<int> kite_node;
    /// Contracted edge -> source edge. Dart parity is preserved.
    std::vector<int> source_edge;
    /// Source edge -> contracted edge (-1 for kite sides and spokes).
    std::vector<int> edge_of_source;
    int outer_dart = -1;

    int source_dart(int d) const { return 2 * source_edge[PlanarMap::edge_of(d)] + (d & 1); }
};

/// Darts leaving corner i of the kite that do not belong to the kite,
/// in clockwise order from the previous corner's side to the next one's.
std::vector<int> outside_darts(const PlanarMap& map, const KiteRecord& kite, int i);

/// Works on the planarization or on the graph with crossings removed.
Contraction contract_kites(const EmbeddedGraph& g, std::span<const KiteRecord> kites);

/// Edge -> biconnected component id on a (multi)graph; returns the count.
int biconnected_components(const PlanarMap& map, std::vector<int>& component);

}  // namespace icdraw
