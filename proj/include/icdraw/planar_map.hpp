#pragma once

#include <utility>
#include <vector>

namespace icdraw {

/// Rotation system stored as darts (half-edges).
///
/// Edge e owns darts 2e (first endpoint -> second endpoint) and 2e+1.
/// Around every vertex the outgoing darts form a circular doubly linked
/// list in clockwise order. Walking a face uses face_next(d) =
/// cw_next(twin(d)), so each dart belongs to exactly one face.
class PlanarMap {
public:
    PlanarMap() = default;
    explicit PlanarMap(int num_vertices);

    /// Builds from per-vertex clockwise edge lists. Inputs must already be
    /// structurally consistent (each edge listed once at each endpoint).
    static PlanarMap from_rotations(int num_vertices,
                                    const std::vector<std::pair<int, int>>& edges,
                                    const std::vector<std::vector<int>>& rotations);

    int add_vertex();

    /// Adds edge u-v. The new dart at u is placed clockwise right after
    /// `after_u` (a dart leaving u), or alone if u has no darts (-1).
    /// Same for v. Returns the edge id; dart 2e leaves u.
    int add_edge(int u, int v, int after_u, int after_v);

    /// Re-links a previously removed edge slot.
    void reinsert_edge(int e, int u, int v, int after_u, int after_v);

    void remove_edge(int e);

    /// Drops a vertex with no incident darts.
    void remove_vertex(int v);

    static constexpr int twin(int d) { return d ^ 1; }
    static constexpr int edge_of(int d) { return d >> 1; }

    int head(int d) const { return head_[d]; }
    int origin(int d) const { return head_[d ^ 1]; }
    int cw_next(int d) const { return cw_next_[d]; }
    int cw_prev(int d) const { return cw_prev_[d]; }
    int face_next(int d) const { return cw_next_[d ^ 1]; }

    /// Some dart leaving v, or -1.
    int first_dart(int v) const { return first_[v]; }
    /// The dart of edge e leaving v; e must be incident to v.
    int dart_from(int e, int v) const { return head_[2 * e + 1] == v ? 2 * e : 2 * e + 1; }

    int vertex_capacity() const { return static_cast<int>(first_.size()); }
    int edge_capacity() const { return static_cast<int>(alive_.size()); }
    bool edge_alive(int e) const { return alive_[e] != 0; }
    bool vertex_alive(int v) const { return vertex_alive_[v] != 0; }
    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return num_edges_; }
    int degree(int v) const { return degree_[v]; }

    /// Clockwise sequence of darts leaving v, starting at first_dart(v).
    std::vector<int> darts_around(int v) const;

    /// Face label for every dart (-1 on dead darts); returns face count.
    int label_faces(std::vector<int>& face_of_dart) const;

private:
    void link(int d, int v, int after);
    void unlink(int d);

    std::vector<int> head_;
    std::vector<int> cw_next_;
    std::vector<int> cw_prev_;
    std::vector<int> first_;
    std::vector<int> degree_;
    std::vector<char> alive_;
    std::vector<char> vertex_alive_;
    int num_vertices_ = 0;
    int num_edges_ = 0;
};

}  // namespace icdraw
