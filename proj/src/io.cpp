#include "icdraw/io.hpp"

#include <cmath>
#include <unordered_map>

namespace icdraw {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::SchemaError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) schema(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) schema(where, std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
    const Json& a = field(j, key, where);
    if (!a.is_array()) schema(where + "." + key, "expected an array");
    return a;
}

int as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) schema(where, "expected an integer");
    return j.get<int>();
}

std::string as_id(const Json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    schema(where, "expected a vertex id");
}

}  // namespace

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') ++line, col = 1;
            else ++col;
        }
        throw Error(ErrorCode::SchemaError,
                    "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
}

EmbeddedGraph graph_from_json(const Json& j, std::vector<char>* augmented) {
    const Json& jv = array_field(j, "vertices", "graph");
    const Json& je = array_field(j, "edges", "graph");
    const Json& jr = field(j, "rotations", "graph");
    if (!jr.is_object()) schema("graph.rotations", "expected an object");

    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < jv.size(); ++i) {
        names.push_back(as_id(jv[i], "vertices[" + std::to_string(i) + "]"));
        if (!index.emplace(names.back(), static_cast<int>(i)).second)
            schema("vertices[" + std::to_string(i) + "]", "duplicate id " + names.back());
    }
    auto lookup = [&](const Json& x, const std::string& where) {
        const std::string id = as_id(x, where);
        const auto it = index.find(id);
        if (it == index.end()) throw Error(ErrorCode::DanglingEdgeEnd, where + ": undeclared vertex " + id);
        return it->second;
    };
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < je.size(); ++e) {
        const std::string where = "edges[" + std::to_string(e) + "]";
        if (!je[e].is_array() || je[e].size() != 2) schema(where, "expected a pair of vertex ids");
        edges.emplace_back(lookup(je[e][0], where + "[0]"), lookup(je[e][1], where + "[1]"));
    }
    std::vector<std::vector<int>> rotations(names.size());
    for (auto it = jr.begin(); it != jr.end(); ++it) {
        const std::string where = "rotations." + it.key();
        const auto vi = index.find(it.key());
        if (vi == index.end()) throw Error(ErrorCode::DanglingEdgeEnd, where + ": undeclared vertex");
        if (!it->is_array()) schema(where, "expected an array of edge indices");
        for (std::size_t k = 0; k < it->size(); ++k)
            rotations[vi->second].push_back(as_int((*it)[k], where + "[" + std::to_string(k) + "]"));
    }
    std::vector<char> dummy(names.size(), 0);
    if (j.contains("dummies")) {
        const Json& jd = array_field(j, "dummies", "graph");
        for (std::size_t i = 0; i < jd.size(); ++i) dummy[lookup(jd[i], "dummies[" + std::to_string(i) + "]")] = 1;
    }
    int outer = -1;
    if (j.contains("outer_face_edge")) outer = as_int(j["outer_face_edge"], "outer_face_edge");
    else if (!edges.empty()) schema("graph", "missing field \"outer_face_edge\"");
    if (!edges.empty() && (outer < 0 || outer >= static_cast<int>(edges.size())))
        schema("outer_face_edge", "edge index out of range");
    if (augmented) {
        augmented->assign(edges.size(), 0);
        if (j.contains("augmented")) {
            const Json& ja = array_field(j, "augmented", "graph");
            for (std::size_t i = 0; i < ja.size(); ++i) {
                const int e = as_int(ja[i], "augmented[" + std::to_string(i) + "]");
                if (e < 0 || e >= static_cast<int>(edges.size())) schema("augmented", "edge index out of range");
                (*augmented)[e] = 1;
            }
        }
    }
    return build_embedded_graph(std::move(names), edges, rotations, std::move(dummy), outer);
}

Json graph_to_json(const EmbeddedGraph& g, const std::vector<char>* augmented) {
    const PlanarMap& map = g.map();
    std::vector<int> new_id(map.edge_capacity(), -1);
    int next = 0;
    for (int e = 0; e < map.edge_capacity(); ++e)
        if (map.edge_alive(e)) new_id[e] = next++;
    const int outer_edge = g.outer_dart() >= 0 ? PlanarMap::edge_of(g.outer_dart()) : -1;
    // An odd outer dart is expressed by listing that edge reversed.
    const bool flip = g.outer_dart() >= 0 && (g.outer_dart() & 1);

    Json j;
    j["vertices"] = Json::array();
    j["dummies"] = Json::array();
    j["rotations"] = Json::object();
    for (int v = 0; v < g.vertex_capacity(); ++v) {
        if (!map.vertex_alive(v)) continue;
        j["vertices"].push_back(g.name(v));
        if (g.is_dummy(v)) j["dummies"].push_back(g.name(v));
        Json rot = Json::array();
        for (int d : map.darts_around(v)) rot.push_back(new_id[PlanarMap::edge_of(d)]);
        j["rotations"][g.name(v)] = rot;
    }
    j["edges"] = Json::array();
    Json aug = Json::array();
    for (int e = 0; e < map.edge_capacity(); ++e) {
        if (!map.edge_alive(e)) continue;
        std::string a = g.name(map.origin(2 * e)), b = g.name(map.head(2 * e));
        if (flip && e == outer_edge) std::swap(a, b);
        j["edges"].push_back({a, b});
        if (augmented && e < static_cast<int>(augmented->size()) && (*augmented)[e]) aug.push_back(new_id[e]);
    }
    if (outer_edge >= 0) j["outer_face_edge"] = new_id[outer_edge];
    if (!aug.empty()) j["augmented"] = aug;
    return j;
}

ICPlaneGraph read_ic_graph(std::string_view text) {
    std::vector<char> aug;
    const EmbeddedGraph g = graph_from_json(parse_json_text(text), &aug);
    return validate_ic_planar(g, aug);
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

namespace {

Json coord(std::int64_t v, int scale) {
    if (scale == 1 || v % scale == 0) return v / scale;
    return static_cast<double>(v) / scale;
}

Json point(const Point& p, int scale) { return Json::array({coord(p.x, scale), coord(p.y, scale)}); }

std::int64_t read_coord(const Json& j, int scale, const std::string& where) {
    if (j.is_number_integer()) return j.get<std::int64_t>() * scale;
    if (j.is_number()) {
        const double v = j.get<double>() * scale;
        if (v != std::floor(v)) schema(where, "coordinate not on the grid");
        return static_cast<std::int64_t>(v);
    }
    schema(where, "expected a number");
}

Point read_point(const Json& j, int scale, const std::string& where) {
    if (!j.is_array() || j.size() != 2) schema(where, "expected [x, y]");
    return {read_coord(j[0], scale, where), read_coord(j[1], scale, where)};
}

int read_scale(const Json& j) {
    if (!j.contains("scale")) return 1;
    const int s = as_int(j["scale"], "scale");
    if (s <= 0) schema("scale", "must be positive");
    return s;
}

std::unordered_map<std::string, int> index_of(const std::vector<std::string>& names) {
    std::unordered_map<std::string, int> m;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!m.emplace(names[i], static_cast<int>(i)).second) schema("vertices", "duplicate id " + names[i]);
    return m;
}

int vertex_ref(const std::unordered_map<std::string, int>& m, const Json& j, const std::string& where) {
    const auto it = m.find(as_id(j, where));
    if (it == m.end()) schema(where, "unknown vertex");
    return it->second;
}

Json crossings_json(const std::vector<std::array<int, 2>>& c) {
    Json a = Json::array();
    for (const auto& p : c) a.push_back({p[0], p[1]});
    return a;
}

std::vector<std::array<int, 2>> read_crossings(const Json& j) {
    std::vector<std::array<int, 2>> out;
    if (!j.contains("crossings")) return out;
    const Json& a = array_field(j, "crossings", "drawing");
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string where = "crossings[" + std::to_string(i) + "]";
        if (!a[i].is_array() || a[i].size() != 2) schema(where, "expected a pair of edge indices");
        out.push_back({as_int(a[i][0], where), as_int(a[i][1], where)});
    }
    return out;
}

}  // namespace

Json to_json(const LVisibilityDrawing& d, int scale) {
    Json j;
    j["model"] = "l-visibility";
    j["scale"] = scale;
    j["vertices"] = Json::array();
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        const LShape& s = d.shapes[v];
        j["vertices"].push_back({{"id", d.vertices[v]},
                                 {"corner", point(s.corner, scale)},
                                 {"h", coord(s.h_extent, scale)},
                                 {"v", coord(s.v_extent, scale)}});
    }
    j["edges"] = Json::array();
    for (const auto& e : d.visibilities) {
        j["edges"].push_back({{"u", d.vertices[e.u]},
                              {"v", d.vertices[e.v]},
                              {"augmented", e.augmented},
                              {"from", point(e.a, scale)},
                              {"to", point(e.b, scale)}});
    }
    j["crossings"] = crossings_json(d.crossings);
    return j;
}

Json to_json(const RacDrawing& d, int scale) {
    Json j;
    j["model"] = "rac";
    j["scale"] = scale;
    j["vertices"] = Json::array();
    for (std::size_t v = 0; v < d.vertices.size(); ++v)
        j["vertices"].push_back({{"id", d.vertices[v]}, {"point", point(d.points[v], scale)}});
    j["edges"] = Json::array();
    for (const auto& e : d.edges) {
        Json pts = Json::array();
        for (const auto& p : e.points) pts.push_back(point(p, scale));
        j["edges"].push_back({{"u", d.vertices[e.u]}, {"v", d.vertices[e.v]}, {"augmented", e.augmented}, {"points", pts}});
    }
    j["crossings"] = crossings_json(d.crossings);
    return j;
}

LVisibilityDrawing l_visibility_from_json(const Json& j) {
    if (!j.is_object() || j.value("model", "") != "l-visibility") schema("drawing", "model must be \"l-visibility\"");
    const int scale = read_scale(j);
    LVisibilityDrawing d;
    const Json& jv = array_field(j, "vertices", "drawing");
    for (std::size_t i = 0; i < jv.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        d.vertices.push_back(as_id(field(jv[i], "id", where), where + ".id"));
        d.shapes.push_back({read_point(field(jv[i], "corner", where), scale, where + ".corner"),
                            read_coord(field(jv[i], "h", where), scale, where + ".h"),
                            read_coord(field(jv[i], "v", where), scale, where + ".v")});
    }
    const auto idx = index_of(d.vertices);
    const Json& je = array_field(j, "edges", "drawing");
    for (std::size_t i = 0; i < je.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        Visibility vis;
        vis.u = vertex_ref(idx, field(je[i], "u", where), where + ".u");
        vis.v = vertex_ref(idx, field(je[i], "v", where), where + ".v");
        vis.augmented = je[i].value("augmented", false);
        vis.a = read_point(field(je[i], "from", where), scale, where + ".from");
        vis.b = read_point(field(je[i], "to", where), scale, where + ".to");
        d.visibilities.push_back(vis);
    }
    d.crossings = read_crossings(j);
    return d;
}

RacDrawing rac_from_json(const Json& j) {
    if (!j.is_object() || j.value("model", "") != "rac") schema("drawing", "model must be \"rac\"");
    const int scale = read_scale(j);
    RacDrawing d;
    const Json& jv = array_field(j, "vertices", "drawing");
    for (std::size_t i = 0; i < jv.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        d.vertices.push_back(as_id(field(jv[i], "id", where), where + ".id"));
        d.points.push_back(read_point(field(jv[i], "point", where), scale, where + ".point"));
    }
    const auto idx = index_of(d.vertices);
    const Json& je = array_field(j, "edges", "drawing");
    for (std::size_t i = 0; i < je.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        Polyline pl;
        pl.u = vertex_ref(idx, field(je[i], "u", where), where + ".u");
        pl.v = vertex_ref(idx, field(je[i], "v", where), where + ".v");
        pl.augmented = je[i].value("augmented", false);
        const Json& pts = array_field(je[i], "points", where);
        for (std::size_t k = 0; k < pts.size(); ++k)
            pl.points.push_back(read_point(pts[k], scale, where + ".points[" + std::to_string(k) + "]"));
        d.edges.push_back(std::move(pl));
    }
    d.crossings = read_crossings(j);
    return d;
}

}  // namespace icdraw
