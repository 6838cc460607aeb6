#include "icdraw/planar_map.hpp"

#include <cassert>

namespace icdraw {

PlanarMap::PlanarMap(int num_vertices)
    : first_(num_vertices, -1),
      degree_(num_vertices, 0),
      vertex_alive_(num_vertices, 1),
      num_vertices_(num_vertices) {}

PlanarMap PlanarMap::from_rotations(int num_vertices,
                                    const std::vector<std::pair<int, int>>& edges,
                                    const std::vector<std::vector<int>>& rotations) {
    PlanarMap m(num_vertices);
    const auto ne = edges.size();
    m.head_.resize(2 * ne);
    m.cw_next_.assign(2 * ne, -1);
    m.cw_prev_.assign(2 * ne, -1);
    m.alive_.assign(ne, 1);
    m.num_edges_ = static_cast<int>(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        m.head_[2 * e] = edges[e].second;
        m.head_[2 * e + 1] = edges[e].first;
    }
    for (int v = 0; v < num_vertices; ++v) {
        const auto& rot = rotations[v];
        const int k = static_cast<int>(rot.size());
        m.degree_[v] = k;
        if (k == 0) continue;
        std::vector<int> darts(k);
        for (int i = 0; i < k; ++i) darts[i] = m.dart_from(rot[i], v);
        for (int i = 0; i < k; ++i) {
            m.cw_next_[darts[i]] = darts[(i + 1) % k];
            m.cw_prev_[darts[i]] = darts[(i + k - 1) % k];
        }
        m.first_[v] = darts[0];
    }
    return m;
}

int PlanarMap::add_vertex() {
    first_.push_back(-1);
    degree_.push_back(0);
    vertex_alive_.push_back(1);
    ++num_vertices_;
    return static_cast<int>(first_.size()) - 1;
}

void PlanarMap::link(int d, int v, int after) {
    if (after < 0) {
        assert(first_[v] < 0);
        cw_next_[d] = d;
        cw_prev_[d] = d;
        first_[v] = d;
    } else {
        assert(origin(after) == v);
        const int nxt = cw_next_[after];
        cw_next_[after] = d;
        cw_prev_[d] = after;
        cw_next_[d] = nxt;
        cw_prev_[nxt] = d;
    }
    ++degree_[v];
}

void PlanarMap::unlink(int d) {
    const int v = origin(d);
    if (cw_next_[d] == d) {
        first_[v] = -1;
    } else {
        const int p = cw_prev_[d];
        const int n = cw_next_[d];
        cw_next_[p] = n;
        cw_prev_[n] = p;
        if (first_[v] == d) first_[v] = n;
    }
    --degree_[v];
}

int PlanarMap::add_edge(int u, int v, int after_u, int after_v) {
    const int e = static_cast<int>(alive_.size());
    alive_.push_back(0);
    head_.resize(head_.size() + 2);
    cw_next_.resize(cw_next_.size() + 2);
    cw_prev_.resize(cw_prev_.size() + 2);
    reinsert_edge(e, u, v, after_u, after_v);
    return e;
}

void PlanarMap::reinsert_edge(int e, int u, int v, int after_u, int after_v) {
    assert(!alive_[e]);
    assert(u != v);
    head_[2 * e] = v;
    head_[2 * e + 1] = u;
    link(2 * e, u, after_u);
    link(2 * e + 1, v, after_v);
    alive_[e] = 1;
    ++num_edges_;
}

void PlanarMap::remove_edge(int e) {
    assert(alive_[e]);
    unlink(2 * e);
    unlink(2 * e + 1);
    alive_[e] = 0;
    --num_edges_;
}

void PlanarMap::remove_vertex(int v) {
    assert(degree_[v] == 0);
    if (vertex_alive_[v]) {
        vertex_alive_[v] = 0;
        --num_vertices_;
    }
}

std::vector<int> PlanarMap::darts_around(int v) const {
    std::vector<int> out;
    const int start = first_[v];
    if (start < 0) return out;
    out.reserve(degree_[v]);
    int d = start;
    do {
        out.push_back(d);
        d = cw_next_[d];
    } while (d != start);
    return out;
}

int PlanarMap::label_faces(std::vector<int>& face_of_dart) const {
    face_of_dart.assign(head_.size(), -1);
    int faces = 0;
    for (int d = 0; d < static_cast<int>(head_.size()); ++d) {
        if (!alive_[d >> 1] || face_of_dart[d] >= 0) continue;
        int x = d;
        do {
            face_of_dart[x] = faces;
            x = face_next(x);
        } while (x != d);
        ++faces;
    }
    return faces;
}

}  // namespace icdraw
