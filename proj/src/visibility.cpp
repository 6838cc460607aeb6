#include "icdraw/visibility.hpp"

#include <algorithm>
#include <climits>

namespace icdraw {

DualNumbering dual_number(const PlanarMap& map, const StOrientation& orientation, int outer_dart) {
    DualNumbering dn;
    dn.faces = map.label_faces(dn.face_of);
    dn.outer = outer_dart >= 0 ? dn.face_of[outer_dart] : -1;
    const int nodes = dn.faces + 1;
    const int t_star = dn.faces;
    dn.left.assign(map.edge_capacity(), -1);
    dn.right.assign(map.edge_capacity(), -1);
    std::vector<std::vector<int>> out(nodes);
    std::vector<int> indeg(nodes, 0);
    for (int e = 0; e < map.edge_capacity(); ++e) {
        if (!map.edge_alive(e)) continue;
        const int d = orientation.tail[e] == map.origin(2 * e) ? 2 * e : 2 * e + 1;
        int lf = dn.face_of[d];
        int rf = dn.face_of[PlanarMap::twin(d)];
        if (rf == dn.outer) rf = t_star;
        if (lf == rf) throw Error(ErrorCode::InvariantViolated, "edge with the same face on both sides");
        dn.left[e] = lf;
        dn.right[e] = rf;
        out[lf].push_back(rf);
        ++indeg[rf];
    }
    dn.number.assign(nodes, -1);
    std::vector<int> queue;
    for (int f = 0; f < nodes; ++f) {
        if (indeg[f] == 0) {
            queue.push_back(f);
            dn.number[f] = 0;
        }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int f = queue[h];
        for (int g : out[f]) {
            dn.number[g] = std::max(dn.number[g], dn.number[f] + 1);
            if (--indeg[g] == 0) queue.push_back(g);
        }
    }
    if (static_cast<int>(queue.size()) != nodes) throw Error(ErrorCode::InvariantViolated, "dual graph has a cycle");
    return dn;
}

VisibilityDrawing build_visibility(const PlusGraph& plus, std::span<const KiteRecord> kites) {
    const PlanarMap& map = plus.graph.map();
    const std::vector<int> y = longest_path_numbering(map, plus.orientation.tail);
    const DualNumbering dn = dual_number(map, plus.orientation, plus.graph.outer_dart());

    VisibilityDrawing vd;
    vd.has_bar.assign(map.vertex_capacity(), 0);
    vd.bars.assign(map.vertex_capacity(), Bar{});
    vd.has_segment.assign(map.edge_capacity(), 0);
    vd.segments.assign(map.edge_capacity(), Segment{});
    for (int v = 0; v < map.vertex_capacity(); ++v) {
        if (!map.vertex_alive(v)) continue;
        vd.has_bar[v] = 1;
        vd.bars[v] = {y[v], INT_MAX, INT_MIN};
    }
    for (int e = 0; e < map.edge_capacity(); ++e) {
        if (!map.edge_alive(e)) continue;
        const int u = plus.orientation.tail[e];
        const int v = map.origin(2 * e) == u ? map.head(2 * e) : map.origin(2 * e);
        const int x = 2 * dn.number[dn.left[e]];
        vd.has_segment[e] = 1;
        vd.segments[e] = {x, y[u], y[v]};
        for (int w : {u, v}) {
            vd.bars[w].x_left = std::min(vd.bars[w].x_left, x);
            vd.bars[w].x_right = std::max(vd.bars[w].x_right, x);
        }
        vd.grid_width = std::max(vd.grid_width, x);
    }
    for (int v = 0; v < map.vertex_capacity(); ++v) {
        if (!vd.has_bar[v]) continue;
        if (vd.bars[v].x_left > vd.bars[v].x_right) vd.bars[v].x_left = vd.bars[v].x_right = 0;
        vd.grid_height = std::max(vd.grid_height, vd.bars[v].y);
    }

    for (const auto& k : kites) {
        const Bar& o = vd.bars[k.origin];
        const Bar& z = vd.bars[k.destination];
        const Bar& l = vd.bars[k.left];
        const Bar& r = vd.bars[k.right];
        int diag = -1;
        for (int d : map.darts_around(k.origin))
            if (map.head(d) == k.destination && plus.real_of_edge[PlanarMap::edge_of(d)] >= 0 &&
                (plus.real_of_edge[PlanarMap::edge_of(d)] == k.diagonals[0] ||
                 plus.real_of_edge[PlanarMap::edge_of(d)] == k.diagonals[1]))
                diag = PlanarMap::edge_of(d);
        if (diag < 0) throw Error(ErrorCode::ClearanceViolation, "kite diagonal missing");
        const int x = vd.segments[diag].x;
        const bool ok = l.x_right + 1 <= x - 1 && x + 1 <= r.x_left - 1 && o.y < std::min(l.y, r.y) &&
                        z.y > std::max(l.y, r.y);
        if (!ok)
            throw Error(ErrorCode::ClearanceViolation,
                        "kite at " + plus.graph.name(k.origin) + " lacks room for its crossing");
    }
    return vd;
}

}  // namespace icdraw
