#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icdraw/error.hpp"
#include "icdraw/planar_map.hpp"

namespace icdraw {

/// One face of a rotation system: its boundary darts in walking order.
struct Face {
    std::vector<int> darts;
    /// Origins of the boundary darts, with multiplicity.
    std::vector<int> vertices;
};

/// Plane (multi)graph given by a rotation system, possibly containing
/// crossing dummies. Vertex ids are opaque strings; indices follow
/// input order.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;
    EmbeddedGraph(std::vector<std::string> names, std::vector<char> dummy, PlanarMap map, int outer_dart);

    const PlanarMap& map() const { return map_; }
    PlanarMap& mutable_map() { return map_; }

    int vertex_capacity() const { return map_.vertex_capacity(); }
    int edge_capacity() const { return map_.edge_capacity(); }
    int num_vertices() const { return map_.num_vertices(); }
    int num_edges() const { return map_.num_edges(); }

    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    bool is_dummy(int v) const { return dummy_[v] != 0; }
    void set_dummy(int v, bool flag) { dummy_[v] = flag ? 1 : 0; }
    int add_vertex(std::string name, bool dummy);

    /// Endpoints of edge e, as (origin of dart 2e, head of dart 2e).
    std::pair<int, int> endpoints(int e) const { return {map_.origin(2 * e), map_.head(2 * e)}; }
    /// Edge ids around v in clockwise order.
    std::vector<int> rotation(int v) const;

    /// A dart of the designated outer face (-1 for an edgeless graph).
    int outer_dart() const { return outer_dart_; }
    void set_outer_dart(int d) { outer_dart_ = d; }

    bool is_connected() const;

private:
    std::vector<std::string> names_;
    std::vector<char> dummy_;
    PlanarMap map_;
    int outer_dart_ = -1;
};

/// Structural construction from rotations. Throws Error listing every
/// structural problem (DanglingEdgeEnd, DuplicateEdgeEnd, SelfLoop,
/// EmptyGraph). The outer face is the face containing edge
/// `outer_face_edge` traversed from its first to its second endpoint.
EmbeddedGraph build_embedded_graph(std::vector<std::string> vertices,
                                   const std::vector<std::pair<int, int>>& edges,
                                   const std::vector<std::vector<int>>& rotations,
                                   std::vector<char> dummy_flags,
                                   int outer_face_edge);

/// Traces every face. Throws NotConnected for multi-component inputs.
std::vector<Face> compute_faces(const EmbeddedGraph& g);

struct Crossing {
    int dummy = -1;
    /// Planarization edges at the dummy, clockwise.
    std::array<int, 4> spokes{};
    /// Real endpoint reached through each spoke. The crossing real edges
    /// are corners[0]-corners[2] and corners[1]-corners[3].
    std::array<int, 4> corners{};
    /// Ids of the two crossing real edges (0-2 first, then 1-3).
    std::array<int, 2> real{};
};

/// Edge of the dummy-free graph.
struct RealEdge {
    int u = -1;
    int v = -1;
    int crossing = -1;
    bool augmented = false;
    /// Planarization edges realizing it: {e, -1} when uncrossed, else the
    /// two spokes.
    std::array<int, 2> parts{-1, -1};
};

/// Validated planarization of an IC-plane drawing.
struct ICPlaneGraph {
    EmbeddedGraph base;
    std::vector<Crossing> crossings;
    std::vector<RealEdge> real_edges;
    /// Planarization edge -> real edge id (-1 for dead slots).
    std::vector<int> real_of_edge;
    std::vector<std::string> warnings;

    int num_real_vertices() const;
    int num_crossings() const { return static_cast<int>(crossings.size()); }
};

/// Checks IC-planarity of the planarization and rebuilds the crossing list.
/// `augmented` optionally flags planarization edges added by augmentation.
ICPlaneGraph validate_ic_planar(const EmbeddedGraph& g, std::span<const char> augmented = {});

/// Largest edge count of an IC-planar graph on n vertices (n >= 4).
long long ic_edge_bound(long long n);

}  // namespace icdraw
