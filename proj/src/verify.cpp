#include "icdraw/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

namespace icdraw {

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["ok"] = ok();
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations) j["violations"].push_back({{"kind", v.kind}, {"detail", v.detail}});
    j["stats"] = stats;
    return j;
}

namespace {

using i64 = std::int64_t;

std::string str(const Point& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

int orient(const Point& a, const Point& b, const Point& c) {
    const __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

struct Contact {
    enum Type { None, Proper, Touch, Overlap } type = None;
    Point at;
};

Contact contact(const Point& a, const Point& b, const Point& c, const Point& d) {
    Contact r;
    if (a == b || c == d) {
        const Point& p = a == b ? a : c;
        const Point& s = a == b ? c : a;
        const Point& t = a == b ? d : b;
        if (on_segment(p, s, t)) r = {Contact::Touch, p};
        return r;
    }
    const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return {Contact::Proper, {}};
    if (o1 == 0 && o2 == 0) {
        // Collinear: intersect the parameter ranges along the dominant axis.
        const bool use_x = a.x != b.x;
        auto key = [&](const Point& p) { return use_x ? p.x : p.y; };
        const i64 lo = std::max(std::min(key(a), key(b)), std::min(key(c), key(d)));
        const i64 hi = std::min(std::max(key(a), key(b)), std::max(key(c), key(d)));
        if (lo > hi) return r;
        if (lo < hi) return {Contact::Overlap, {}};
        for (const Point* p : {&a, &b})
            if (key(*p) == lo) return {Contact::Touch, *p};
        return r;
    }
    for (const Point* p : {&c, &d})
        if (on_segment(*p, a, b)) return {Contact::Touch, *p};
    for (const Point* p : {&a, &b})
        if (on_segment(*p, c, d)) return {Contact::Touch, *p};
    return r;
}

struct Element {
    Point p, q;
    int kind;   // 0: shape part or vertex point, 1: edge part
    int owner;  // vertex or edge
    int part;
};

/// Calls f on every pair of elements whose bounding boxes meet.
void sweep(std::vector<Element>& el, const std::function<void(const Element&, const Element&)>& f) {
    std::sort(el.begin(), el.end(), [](const Element& a, const Element& b) {
        return std::min(a.p.x, a.q.x) < std::min(b.p.x, b.q.x);
    });
    for (std::size_t i = 0; i < el.size(); ++i) {
        const i64 xmax = std::max(el[i].p.x, el[i].q.x);
        const i64 ylo = std::min(el[i].p.y, el[i].q.y), yhi = std::max(el[i].p.y, el[i].q.y);
        for (std::size_t j = i + 1; j < el.size(); ++j) {
            if (std::min(el[j].p.x, el[j].q.x) > xmax) break;
            if (std::max(el[j].p.y, el[j].q.y) < ylo || std::min(el[j].p.y, el[j].q.y) > yhi) continue;
            f(el[i], el[j]);
        }
    }
}

std::array<int, 2> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

using NamePair = std::array<std::string, 2>;
NamePair name_pair(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

/// Compares edge and crossing sets of a drawing against the graph's.
void compare_with_graph(Report& rep, const ICPlaneGraph& g, const std::vector<std::string>& names,
                        const std::vector<std::array<int, 2>>& ends, const std::vector<char>& augmented,
                        const std::vector<std::array<int, 2>>& crossings) {
    std::multiset<NamePair> want, have;
    for (const auto& r : g.real_edges)
        if (!r.augmented) want.insert(name_pair(g.base.name(r.u), g.base.name(r.v)));
    for (std::size_t i = 0; i < ends.size(); ++i)
        if (!augmented[i]) have.insert(name_pair(names[ends[i][0]], names[ends[i][1]]));
    for (const auto& e : want)
        if (!have.count(e)) rep.add("MissingEdge", e[0] + "-" + e[1]);
    for (const auto& e : have)
        if (!want.count(e)) rep.add("ExtraEdge", e[0] + "-" + e[1]);

    std::set<std::array<NamePair, 2>> cw, ch;
    auto pair_of = [](NamePair a, NamePair b) {
        if (b < a) std::swap(a, b);
        return std::array<NamePair, 2>{a, b};
    };
    for (const auto& c : g.crossings) {
        const RealEdge& r0 = g.real_edges[c.real[0]];
        const RealEdge& r1 = g.real_edges[c.real[1]];
        cw.insert(pair_of(name_pair(g.base.name(r0.u), g.base.name(r0.v)), name_pair(g.base.name(r1.u), g.base.name(r1.v))));
    }
    for (const auto& c : crossings)
        ch.insert(pair_of(name_pair(names[ends[c[0]][0]], names[ends[c[0]][1]]),
                          name_pair(names[ends[c[1]][0]], names[ends[c[1]][1]])));
    if (cw != ch) rep.add("CrossingMismatch", "crossing pairs differ from the graph's");
}

/// Checks registry consistency shared by both drawing types.
void check_crossings(Report& rep, const std::vector<std::array<int, 2>>& registry,
                     const std::map<std::array<int, 2>, int>& found, const std::vector<std::array<int, 2>>& ends,
                     int vertex_count) {
    std::set<std::array<int, 2>> reg;
    for (const auto& c : registry) {
        if (c[0] < 0 || c[1] < 0 || c[0] >= static_cast<int>(ends.size()) || c[1] >= static_cast<int>(ends.size()) ||
            c[0] == c[1]) {
            rep.add("BadCrossingEntry", std::to_string(c[0]) + "," + std::to_string(c[1]));
            continue;
        }
        reg.insert(ordered(c[0], c[1]));
    }
    std::vector<int> per_edge(ends.size(), 0);
    for (const auto& [pair, count] : found) {
        if (!reg.count(pair)) rep.add("UnregisteredCrossing", std::to_string(pair[0]) + "," + std::to_string(pair[1]));
        if (count > 1) rep.add("RepeatedCrossing", std::to_string(pair[0]) + "," + std::to_string(pair[1]));
        ++per_edge[pair[0]];
        ++per_edge[pair[1]];
    }
    std::vector<int> per_vertex(vertex_count, 0);
    for (const auto& pair : reg) {
        if (!found.count(pair)) rep.add("MissingCrossing", std::to_string(pair[0]) + "," + std::to_string(pair[1]));
        const auto& a = ends[pair[0]];
        const auto& b = ends[pair[1]];
        if (a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1])
            rep.add("CrossingSharesEndpoint", std::to_string(pair[0]) + "," + std::to_string(pair[1]));
        for (int v : {a[0], a[1], b[0], b[1]}) ++per_vertex[v];
    }
    for (std::size_t e = 0; e < per_edge.size(); ++e)
        if (per_edge[e] > 1) rep.add("EdgeCrossedTwice", std::to_string(e));
    for (int v = 0; v < vertex_count; ++v)
        if (per_vertex[v] > 1) rep.add("CrossedEdgesShareVertex", std::to_string(v));
}

bool on_shape(const Point& p, const LShape& s) {
    return on_segment(p, s.corner, s.h_end()) || on_segment(p, s.corner, s.v_end());
}

}  // namespace

Report check_st_graph(const EmbeddedGraph& g, std::span<const int> tail, std::span<const int> number) {
    Report rep;
    const PlanarMap& map = g.map();
    const int nv = map.vertex_capacity();
    std::vector<int> indeg(nv, 0), outdeg(nv, 0);
    auto head_of = [&](int e) { return map.origin(2 * e) == tail[e] ? map.head(2 * e) : map.origin(2 * e); };
    bool tails_ok = true;
    for (int e = 0; e < map.edge_capacity(); ++e) {
        if (!map.edge_alive(e)) continue;
        if (e >= static_cast<int>(tail.size()) || (tail[e] != map.origin(2 * e) && tail[e] != map.head(2 * e))) {
            rep.add("BadTail", "edge " + std::to_string(e));
            tails_ok = false;
            continue;
        }
        ++outdeg[tail[e]];
        ++indeg[head_of(e)];
    }
    if (!tails_ok) return rep;

    int sources = 0, sinks = 0, s = -1, t = -1;
    for (int v = 0; v < nv; ++v) {
        if (!map.vertex_alive(v)) continue;
        if (indeg[v] == 0) ++sources, s = v;
        if (outdeg[v] == 0) ++sinks, t = v;
    }
    if (sources != 1) rep.add("SourceCount", std::to_string(sources));
    if (sinks != 1) rep.add("SinkCount", std::to_string(sinks));

    // Kahn's algorithm.
    std::vector<int> deg = indeg, queue;
    for (int v = 0; v < nv; ++v)
        if (map.vertex_alive(v) && deg[v] == 0) queue.push_back(v);
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (int d : map.darts_around(queue[h]))
            if (tail[PlanarMap::edge_of(d)] == queue[h] && --deg[map.head(d)] == 0) queue.push_back(map.head(d));
    if (static_cast<int>(queue.size()) != map.num_vertices()) rep.add("Cyclic", "orientation has a directed cycle");

    std::map<std::array<int, 2>, int> pair_tail;
    for (int v = 0; v < nv; ++v) {
        if (!map.vertex_alive(v)) continue;
        const auto darts = map.darts_around(v);
        int changes = 0;
        for (std::size_t i = 0; i < darts.size(); ++i) {
            const bool a = tail[PlanarMap::edge_of(darts[i])] == v;
            const bool b = tail[PlanarMap::edge_of(darts[(i + 1) % darts.size()])] == v;
            if (a != b) ++changes;
        }
        if (changes > 2) rep.add("NotBipolar", g.name(v));
    }
    for (int e = 0; e < map.edge_capacity(); ++e) {
        if (!map.edge_alive(e)) continue;
        const auto key = ordered(map.origin(2 * e), map.head(2 * e));
        const auto [it, fresh] = pair_tail.emplace(key, tail[e]);
        if (!fresh && it->second != tail[e]) rep.add("ParallelDisagree", g.name(key[0]) + "-" + g.name(key[1]));
        if (!number.empty() && number[tail[e]] >= number[head_of(e)])
            rep.add("NumberingNotIncreasing", "edge " + std::to_string(e));
    }

    if (sources == 1 && sinks == 1 && g.outer_dart() >= 0) {
        bool s_out = false, t_out = false;
        int d = g.outer_dart();
        do {
            s_out |= map.origin(d) == s;
            t_out |= map.origin(d) == t;
            d = map.face_next(d);
        } while (d != g.outer_dart());
        if (!s_out) rep.add("SourceNotOuter", g.name(s));
        if (!t_out) rep.add("SinkNotOuter", g.name(t));
    }
    rep.stats["vertices"] = map.num_vertices();
    rep.stats["edges"] = map.num_edges();
    return rep;
}

Report check_l_visibility(const LVisibilityDrawing& d, const ICPlaneGraph* graph) {
    Report rep;
    const int n = static_cast<int>(d.vertices.size());
    if (static_cast<int>(d.shapes.size()) != n) {
        rep.add("ShapeCount", "one shape per vertex expected");
        return rep;
    }
    std::vector<Element> el;
    for (int v = 0; v < n; ++v) {
        const LShape& s = d.shapes[v];
        if (s.h_extent != 0) el.push_back({s.corner, s.h_end(), 0, v, 0});
        if (s.v_extent != 0) el.push_back({s.corner, s.v_end(), 0, v, 1});
        if (s.h_extent == 0 && s.v_extent == 0) el.push_back({s.corner, s.corner, 0, v, 0});
    }
    std::vector<std::array<int, 2>> ends;
    std::vector<char> augmented;
    bool ends_ok = true;
    for (std::size_t i = 0; i < d.visibilities.size(); ++i) {
        const Visibility& vis = d.visibilities[i];
        const std::string id = "visibility " + std::to_string(i);
        ends.push_back({vis.u, vis.v});
        augmented.push_back(vis.augmented);
        if (vis.u < 0 || vis.v < 0 || vis.u >= n || vis.v >= n || vis.u == vis.v) {
            rep.add("BadEndpoints", id);
            ends_ok = false;
            continue;
        }
        if (vis.a == vis.b) rep.add("DegenerateVisibility", id);
        if (vis.a.x != vis.b.x && vis.a.y != vis.b.y) rep.add("NotAxisAligned", id);
        if (!on_shape(vis.a, d.shapes[vis.u])) rep.add("EndpointOffShape", id + " at " + str(vis.a));
        if (!on_shape(vis.b, d.shapes[vis.v])) rep.add("EndpointOffShape", id + " at " + str(vis.b));
        el.push_back({vis.a, vis.b, 1, static_cast<int>(i), 0});
    }
    if (!ends_ok) return rep;

    std::map<std::array<int, 2>, int> found;
    auto endpoint_vertex = [&](int i, const Point& p) {
        const Visibility& vis = d.visibilities[i];
        return p == vis.a ? vis.u : (p == vis.b ? vis.v : -1);
    };
    sweep(el, [&](const Element& x, const Element& y) {
        const Contact c = contact(x.p, x.q, y.p, y.q);
        if (c.type == Contact::None) return;
        if (x.kind == 0 && y.kind == 0) {
            if (x.owner != y.owner) rep.add("ShapeOverlap", d.vertices[x.owner] + " and " + d.vertices[y.owner]);
            return;
        }
        if (x.kind != y.kind) {
            const Element& s = x.kind == 0 ? x : y;
            const Element& v = x.kind == 0 ? y : x;
            if (c.type != Contact::Touch || endpoint_vertex(v.owner, c.at) != s.owner)
                rep.add("VisibilityHitsShape", "visibility " + std::to_string(v.owner) + " meets " + d.vertices[s.owner]);
            return;
        }
        const std::string id = std::to_string(x.owner) + "," + std::to_string(y.owner);
        if (c.type == Contact::Proper) {
            const bool hx = d.visibilities[x.owner].horizontal();
            const bool hy = d.visibilities[y.owner].horizontal();
            if (hx == hy) rep.add("ParallelCrossing", id);
            ++found[ordered(x.owner, y.owner)];
        } else if (c.type == Contact::Touch) {
            const int w = endpoint_vertex(x.owner, c.at);
            if (w < 0 || w != endpoint_vertex(y.owner, c.at)) rep.add("VisibilityTouch", id + " at " + str(c.at));
        } else {
            rep.add("VisibilityOverlap", id);
        }
    });
    check_crossings(rep, d.crossings, found, ends, n);
    if (graph) compare_with_graph(rep, *graph, d.vertices, ends, augmented, d.crossings);
    rep.stats["shapes"] = n;
    rep.stats["visibilities"] = static_cast<i64>(d.visibilities.size());
    rep.stats["crossings"] = static_cast<i64>(found.size());
    return rep;
}

Report check_rac(const RacDrawing& d, const ICPlaneGraph* graph) {
    Report rep;
    const int n = static_cast<int>(d.vertices.size());
    if (static_cast<int>(d.points.size()) != n) {
        rep.add("PointCount", "one point per vertex expected");
        return rep;
    }
    {
        std::vector<std::pair<i64, i64>> pts;
        for (const auto& p : d.points) pts.emplace_back(p.x, p.y);
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) rep.add("VertexOverlap", "two vertices share a point");
    }
    std::vector<Element> el;
    for (int v = 0; v < n; ++v) el.push_back({d.points[v], d.points[v], 0, v, 0});
    std::vector<std::array<int, 2>> ends;
    std::vector<char> augmented;
    int max_bends = 0;
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        const Polyline& pl = d.edges[i];
        const std::string id = "edge " + std::to_string(i);
        ends.push_back({pl.u, pl.v});
        augmented.push_back(pl.augmented);
        if (pl.u < 0 || pl.v < 0 || pl.u >= n || pl.v >= n || pl.u == pl.v || pl.points.size() < 2) {
            rep.add("BadEdge", id);
            return rep;
        }
        const int bends = static_cast<int>(pl.points.size()) - 2;
        max_bends = std::max(max_bends, bends);
        if (bends > 2) rep.add("TooManyBends", id + " has " + std::to_string(bends));
        if (!(pl.points.front() == d.points[pl.u]) || !(pl.points.back() == d.points[pl.v]))
            rep.add("EndpointMismatch", id);
        for (std::size_t k = 0; k + 1 < pl.points.size(); ++k) {
            if (pl.points[k] == pl.points[k + 1]) rep.add("ZeroLengthSegment", id);
            el.push_back({pl.points[k], pl.points[k + 1], 1, static_cast<int>(i), static_cast<int>(k)});
        }
    }

    std::map<std::array<int, 2>, int> found;
    i64 on_middle = 0;
    auto last_part = [&](int e) { return static_cast<int>(d.edges[e].points.size()) - 2; };
    sweep(el, [&](const Element& x, const Element& y) {
        if (x.kind == 0 && y.kind == 0) return;
        const Contact c = contact(x.p, x.q, y.p, y.q);
        if (c.type == Contact::None) return;
        if (x.kind != y.kind) {
            const Element& pt = x.kind == 0 ? x : y;
            const Element& sg = x.kind == 0 ? y : x;
            const Polyline& pl = d.edges[sg.owner];
            const bool ok = (pt.owner == pl.u && sg.part == 0 && c.at == pl.points.front()) ||
                            (pt.owner == pl.v && sg.part == last_part(sg.owner) && c.at == pl.points.back());
            if (!ok) rep.add("VertexOnEdge", d.vertices[pt.owner] + " on edge " + std::to_string(sg.owner));
            return;
        }
        const std::string id = std::to_string(x.owner) + "," + std::to_string(y.owner);
        if (x.owner == y.owner) {
            const bool adjacent = std::abs(x.part - y.part) == 1;
            if (!adjacent || c.type != Contact::Touch) rep.add("SelfIntersection", "edge " + std::to_string(x.owner));
            return;
        }
        if (c.type == Contact::Proper) {
            const i64 dot = (x.q.x - x.p.x) * (y.q.x - y.p.x) + (x.q.y - x.p.y) * (y.q.y - y.p.y);
            if (dot != 0) rep.add("NonRightCrossing", id);
            ++found[ordered(x.owner, y.owner)];
            if (x.part == 1 && y.part == 1 && last_part(x.owner) == 2 && last_part(y.owner) == 2) ++on_middle;
        } else if (c.type == Contact::Touch) {
            const Polyline& a = d.edges[x.owner];
            const Polyline& b = d.edges[y.owner];
            bool shared = false;
            for (int w : {a.u, a.v})
                if ((w == b.u || w == b.v) && c.at == d.points[w]) shared = true;
            if (!shared) rep.add("EdgeTouch", id + " at " + str(c.at));
        } else {
            rep.add("EdgeOverlap", id);
        }
    });
    check_crossings(rep, d.crossings, found, ends, n);
    if (graph) compare_with_graph(rep, *graph, d.vertices, ends, augmented, d.crossings);
    rep.stats["points"] = n;
    rep.stats["edges"] = static_cast<i64>(d.edges.size());
    rep.stats["crossings"] = static_cast<i64>(found.size());
    rep.stats["crossings_on_middle_segments"] = on_middle;
    rep.stats["max_bends"] = max_bends;
    return rep;
}

namespace {

struct Box {
    i64 x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool empty = true;
    void add(const Point& p) {
        if (empty) {
            x0 = x1 = p.x;
            y0 = y1 = p.y;
            empty = false;
            return;
        }
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
};

}  // namespace

Metrics measure(const LVisibilityDrawing& d) {
    Box box;
    for (const auto& s : d.shapes) {
        box.add(s.corner);
        box.add(s.h_end());
        box.add(s.v_end());
    }
    for (const auto& v : d.visibilities) {
        box.add(v.a);
        box.add(v.b);
    }
    Metrics m;
    m.width = box.x1 - box.x0;
    m.height = box.y1 - box.y0;
    m.crossings = static_cast<int>(d.crossings.size());
    return m;
}

Metrics measure(const RacDrawing& d) {
    Box box;
    for (const auto& p : d.points) box.add(p);
    Metrics m;
    for (const auto& e : d.edges) {
        for (const auto& p : e.points) box.add(p);
        const int bends = std::max(0, static_cast<int>(e.points.size()) - 2);
        m.max_bends = std::max(m.max_bends, bends);
        m.total_bends += bends;
    }
    m.width = box.x1 - box.x0;
    m.height = box.y1 - box.y0;
    m.crossings = static_cast<int>(d.crossings.size());
    return m;
}

}  // namespace icdraw
