#include "icdraw/drawing.hpp"

#include <algorithm>

namespace icdraw {

namespace {

struct Frame {
    std::vector<int> compact;  // base vertex -> drawing vertex
    LVisibilityDrawing out;
};

Frame start_drawing(const VisibilityDrawing& bars, const ICPlaneGraph& graph) {
    Frame f;
    const EmbeddedGraph& base = graph.base;
    f.compact.assign(base.vertex_capacity(), -1);
    for (int v = 0; v < base.vertex_capacity(); ++v) {
        if (!base.map().vertex_alive(v) || base.is_dummy(v)) continue;
        f.compact[v] = static_cast<int>(f.out.vertices.size());
        f.out.vertices.push_back(base.name(v));
        const Bar& b = bars.bars[v];
        f.out.shapes.push_back({{4LL * b.x_left, 4LL * b.y}, 4LL * (b.x_right - b.x_left), 0});
    }
    f.out.visibilities.resize(graph.real_edges.size());
    for (std::size_t r = 0; r < graph.real_edges.size(); ++r) {
        const RealEdge& re = graph.real_edges[r];
        auto& vis = f.out.visibilities[r];
        vis.u = f.compact[re.u];
        vis.v = f.compact[re.v];
        vis.augmented = re.augmented;
    }
    return f;
}

void place_vertical(Frame& f, const VisibilityDrawing& bars, const PlusGraph& plus, const ICPlaneGraph& graph,
                    std::vector<char>& drawn) {
    const PlanarMap& map = plus.graph.map();
    for (int e = 0; e < map.edge_capacity(); ++e) {
        if (!map.edge_alive(e)) continue;
        const int r = plus.real_of_edge[e];
        const Segment& s = bars.segments[e];
        const int tail = plus.orientation.tail[e];
        const Point lo{4LL * s.x, 4LL * s.y_low};
        const Point hi{4LL * s.x, 4LL * s.y_high};
        auto& vis = f.out.visibilities[r];
        const bool u_low = graph.real_edges[r].u == tail;
        vis.a = u_low ? lo : hi;
        vis.b = u_low ? hi : lo;
        drawn[r] = 1;
    }
}

}  // namespace

LVisibilityDrawing to_l_visibility(const VisibilityDrawing& bars, const PlusGraph& plus,
                                   std::span<const KiteRecord> kites, const ICPlaneGraph& graph) {
    Frame f = start_drawing(bars, graph);
    std::vector<char> drawn(graph.real_edges.size(), 0);
    place_vertical(f, bars, plus, graph, drawn);

    for (const auto& k : kites) {
        const Bar& bd = bars.bars[k.left];
        const Bar& bb = bars.bars[k.right];
        const std::int64_t yd = 4LL * bd.y;
        const std::int64_t yb = 4LL * bb.y;
        // Tips meet half a cell above a common row, else halfway between.
        const std::int64_t tip = yd == yb ? yd + 2 : (yd + yb) / 2;
        const Point tip_d{4LL * bd.x_right + 1, tip};
        const Point tip_b{4LL * bb.x_left - 1, tip};
        f.out.shapes[f.compact[k.left]] = {{tip_d.x, yd}, 4LL * bd.x_left - tip_d.x, tip - yd};
        f.out.shapes[f.compact[k.right]] = {{tip_b.x, yb}, 4LL * bb.x_right - tip_b.x, tip - yb};

        const int oi = k.corner_index(k.origin);
        const int vertical = k.diagonals[oi % 2];
        const int horizontal = k.diagonals[1 - oi % 2];
        auto& vis = f.out.visibilities[horizontal];
        const bool u_left = graph.real_edges[horizontal].u == k.left;
        vis.a = u_left ? tip_d : tip_b;
        vis.b = u_left ? tip_b : tip_d;
        drawn[horizontal] = 1;
        f.out.crossings.push_back({std::min(vertical, horizontal), std::max(vertical, horizontal)});
    }
    for (std::size_t r = 0; r < drawn.size(); ++r)
        if (!drawn[r]) throw Error(ErrorCode::InvariantViolated, "edge without a visibility");
    std::sort(f.out.crossings.begin(), f.out.crossings.end());
    return std::move(f.out);
}

LVisibilityDrawing bars_only(const VisibilityDrawing& bars, const PlusGraph& plus, const ICPlaneGraph& graph) {
    Frame f = start_drawing(bars, graph);
    std::vector<char> drawn(graph.real_edges.size(), 0);
    place_vertical(f, bars, plus, graph, drawn);
    // Crossing edges left out of P+ have nowhere to go in a bar drawing.
    std::vector<Visibility> kept;
    for (std::size_t r = 0; r < drawn.size(); ++r)
        if (drawn[r]) kept.push_back(f.out.visibilities[r]);
    f.out.visibilities = std::move(kept);
    return std::move(f.out);
}

Point representative_point(const LShape& s) {
    if (s.h_extent != 0 && s.v_extent != 0) return s.corner;
    if (s.h_extent != 0) return {s.corner.x + s.h_extent / 2, s.corner.y};
    if (s.v_extent != 0) return {s.corner.x, s.corner.y + s.v_extent / 2};
    return s.corner;
}

std::vector<Point> simplify_polyline(std::vector<Point> pts) {
    std::vector<Point> out;
    for (const Point& p : pts) {
        if (!out.empty() && out.back() == p) continue;
        while (out.size() >= 2) {
            const Point& a = out[out.size() - 2];
            const Point& b = out.back();
            const std::int64_t cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
            const std::int64_t dot = (b.x - a.x) * (p.x - b.x) + (b.y - a.y) * (p.y - b.y);
            if (cross != 0 || dot < 0) break;
            out.pop_back();
        }
        out.push_back(p);
    }
    return out;
}

RacDrawing to_rac(const LVisibilityDrawing& g) {
    RacDrawing r;
    r.vertices = g.vertices;
    for (const auto& s : g.shapes) r.points.push_back(representative_point(s));
    for (const auto& vis : g.visibilities) {
        Polyline pl;
        pl.u = vis.u;
        pl.v = vis.v;
        pl.augmented = vis.augmented;
        // Bend one unit after leaving p1 and one unit before reaching p2.
        const std::int64_t dx = vis.b.x > vis.a.x ? 1 : (vis.b.x < vis.a.x ? -1 : 0);
        const std::int64_t dy = vis.b.y > vis.a.y ? 1 : (vis.b.y < vis.a.y ? -1 : 0);
        pl.points = simplify_polyline({r.points[vis.u],
                                       {vis.a.x + dx, vis.a.y + dy},
                                       {vis.b.x - dx, vis.b.y - dy},
                                       r.points[vis.v]});
        r.edges.push_back(std::move(pl));
    }
    r.crossings = g.crossings;
    return r;
}

}  // namespace icdraw
