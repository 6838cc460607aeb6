#include "icdraw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace icdraw {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::DanglingEdgeEnd: return "DanglingEdgeEnd";
        case ErrorCode::DuplicateEdgeEnd: return "DuplicateEdgeEnd";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::EulerViolation: return "EulerViolation";
        case ErrorCode::DummyDegreeNot4: return "DummyDegreeNot4";
        case ErrorCode::EdgeCrossedTwice: return "EdgeCrossedTwice";
        case ErrorCode::CrossedEdgesShareEndpoint: return "CrossedEdgesShareEndpoint";
        case ErrorCode::NonSimpleRealGraph: return "NonSimpleRealGraph";
        case ErrorCode::AugmentationFailed: return "AugmentationFailed";
        case ErrorCode::NotBiconnected: return "NotBiconnected";
        case ErrorCode::UnmatchedPattern: return "UnmatchedPattern";
        case ErrorCode::InvariantViolated: return "InvariantViolated";
        case ErrorCode::ClearanceViolation: return "ClearanceViolation";
        case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::vector<std::string> details)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      details_(std::move(details)) {}

EmbeddedGraph::EmbeddedGraph(std::vector<std::string> names, std::vector<char> dummy, PlanarMap map,
                             int outer_dart)
    : names_(std::move(names)), dummy_(std::move(dummy)), map_(std::move(map)), outer_dart_(outer_dart) {}

int EmbeddedGraph::add_vertex(std::string name, bool dummy) {
    names_.push_back(std::move(name));
    dummy_.push_back(dummy ? 1 : 0);
    return map_.add_vertex();
}

std::vector<int> EmbeddedGraph::rotation(int v) const {
    std::vector<int> out;
    for (int d : map_.darts_around(v)) out.push_back(PlanarMap::edge_of(d));
    return out;
}

bool EmbeddedGraph::is_connected() const {
    const int n = vertex_capacity();
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (map_.vertex_alive(v)) {
            start = v;
            break;
        }
    }
    if (start < 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int d : map_.darts_around(v)) {
            const int w = map_.head(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == num_vertices();
}

EmbeddedGraph build_embedded_graph(std::vector<std::string> vertices,
                                   const std::vector<std::pair<int, int>>& edges,
                                   const std::vector<std::vector<int>>& rotations,
                                   std::vector<char> dummy_flags,
                                   int outer_face_edge) {
    const int n = static_cast<int>(vertices.size());
    if (n == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");

    struct Issue {
        ErrorCode code;
        std::string text;
    };
    std::vector<Issue> issues;
    const int m = static_cast<int>(edges.size());
    for (int e = 0; e < m; ++e) {
        const auto [u, v] = edges[e];
        if (u < 0 || u >= n || v < 0 || v >= n) {
            issues.push_back({ErrorCode::DanglingEdgeEnd, "edge " + std::to_string(e) + " has an undeclared endpoint"});
        } else if (u == v) {
            issues.push_back({ErrorCode::SelfLoop, "edge " + std::to_string(e) + " is a loop at " + vertices[u]});
        }
    }
    if (rotations.size() != vertices.size()) {
        issues.push_back({ErrorCode::DanglingEdgeEnd, "rotation count differs from vertex count"});
    }
    if (issues.empty()) {
        // seen[2e] counts the end at the first endpoint, seen[2e+1] the other.
        std::vector<int> seen(2 * m, 0);
        for (int v = 0; v < n; ++v) {
            for (int e : rotations[v]) {
                if (e < 0 || e >= m) {
                    issues.push_back({ErrorCode::DanglingEdgeEnd,
                                      "rotation of " + vertices[v] + " references undeclared edge " + std::to_string(e)});
                    continue;
                }
                int side = -1;
                if (edges[e].first == v) side = 0;
                else if (edges[e].second == v) side = 1;
                if (side < 0) {
                    issues.push_back({ErrorCode::DanglingEdgeEnd,
                                      "rotation of " + vertices[v] + " lists edge " + std::to_string(e) + " not incident to it"});
                    continue;
                }
                if (++seen[2 * e + side] == 2) {
                    issues.push_back({ErrorCode::DuplicateEdgeEnd,
                                      "edge " + std::to_string(e) + " listed twice around " + vertices[v]});
                }
            }
        }
        for (int i = 0; i < 2 * m; ++i) {
            if (seen[i] == 0) {
                const int e = i / 2;
                const int v = (i % 2 == 0) ? edges[e].first : edges[e].second;
                issues.push_back({ErrorCode::DanglingEdgeEnd,
                                  "edge " + std::to_string(e) + " missing from rotation of " + vertices[v]});
            }
        }
    }
    if (m > 0 && (outer_face_edge < 0 || outer_face_edge >= m)) {
        issues.push_back({ErrorCode::DanglingEdgeEnd, "outer_face_edge is not a declared edge"});
    }
    if (!issues.empty()) {
        std::vector<std::string> details;
        for (const auto& i : issues) details.push_back(std::string(to_string(i.code)) + ": " + i.text);
        throw Error(issues.front().code, issues.front().text, std::move(details));
    }
    dummy_flags.resize(n, 0);
    PlanarMap map = PlanarMap::from_rotations(n, edges, rotations);
    return EmbeddedGraph(std::move(vertices), std::move(dummy_flags), std::move(map), m > 0 ? 2 * outer_face_edge : -1);
}

std::vector<Face> compute_faces(const EmbeddedGraph& g) {
    if (!g.is_connected()) throw Error(ErrorCode::NotConnected, "graph has more than one component");
    const PlanarMap& map = g.map();
    std::vector<Face> faces;
    if (map.num_edges() == 0) {
        faces.push_back({});
        return faces;
    }
    std::vector<char> done(2 * map.edge_capacity(), 0);
    for (int d = 0; d < 2 * map.edge_capacity(); ++d) {
        if (!map.edge_alive(PlanarMap::edge_of(d)) || done[d]) continue;
        Face f;
        int x = d;
        do {
            done[x] = 1;
            f.darts.push_back(x);
            f.vertices.push_back(map.origin(x));
            x = map.face_next(x);
        } while (x != d);
        faces.push_back(std::move(f));
    }
    return faces;
}

int ICPlaneGraph::num_real_vertices() const {
    int count = 0;
    for (int v = 0; v < base.vertex_capacity(); ++v) {
        if (base.map().vertex_alive(v) && !base.is_dummy(v)) ++count;
    }
    return count;
}

long long ic_edge_bound(long long n) { return (13 * n) / 4 - 6; }

ICPlaneGraph validate_ic_planar(const EmbeddedGraph& g, std::span<const char> augmented) {
    if (!g.is_connected()) throw Error(ErrorCode::NotConnected, "graph has more than one component");
    const PlanarMap& map = g.map();

    std::vector<int> face_of;
    const int f = map.label_faces(face_of);
    const int n = g.num_vertices();
    const int m = g.num_edges();
    const int expected_faces = (m == 0) ? 1 : 2 - n + m;
    const int faces = (m == 0) ? 1 : f;

    struct Issue {
        ErrorCode code;
        std::string text;
    };
    std::vector<Issue> issues;
    if (faces != expected_faces) {
        issues.push_back({ErrorCode::EulerViolation, "rotation system has " + std::to_string(faces) +
                                                         " faces, a plane embedding needs " +
                                                         std::to_string(expected_faces)});
    }

    ICPlaneGraph out;
    std::vector<int> crossing_of_vertex(g.vertex_capacity(), -1);
    for (int x = 0; x < g.vertex_capacity(); ++x) {
        if (!map.vertex_alive(x) || !g.is_dummy(x)) continue;
        if (map.degree(x) != 4) {
            issues.push_back({ErrorCode::DummyDegreeNot4,
                              "dummy " + g.name(x) + " has degree " + std::to_string(map.degree(x))});
            continue;
        }
        Crossing c;
        c.dummy = x;
        const auto darts = map.darts_around(x);
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            c.spokes[i] = PlanarMap::edge_of(darts[i]);
            c.corners[i] = map.head(darts[i]);
            if (g.is_dummy(c.corners[i])) {
                issues.push_back({ErrorCode::EdgeCrossedTwice,
                                  "dummies " + g.name(x) + " and " + g.name(c.corners[i]) + " are adjacent"});
                ok = false;
            }
        }
        if (!ok) continue;
        if (c.corners[0] == c.corners[2] || c.corners[1] == c.corners[3]) {
            issues.push_back({ErrorCode::NonSimpleRealGraph, "crossing at " + g.name(x) + " involves a loop"});
            continue;
        }
        for (int i = 0; i < 4; ++i) {
            const int v = c.corners[i];
            if (crossing_of_vertex[v] == static_cast<int>(out.crossings.size())) {
                issues.push_back({ErrorCode::CrossedEdgesShareEndpoint,
                                  "crossing at " + g.name(x) + " uses " + g.name(v) + " twice"});
                ok = false;
            } else if (crossing_of_vertex[v] >= 0) {
                issues.push_back({ErrorCode::CrossedEdgesShareEndpoint,
                                  "crossings at " + g.name(out.crossings[crossing_of_vertex[v]].dummy) + " and " +
                                      g.name(x) + " share endpoint " + g.name(v)});
                ok = false;
            } else {
                crossing_of_vertex[v] = static_cast<int>(out.crossings.size());
            }
        }
        if (ok) out.crossings.push_back(c);
    }

    out.real_of_edge.assign(g.edge_capacity(), -1);
    for (int e = 0; e < g.edge_capacity(); ++e) {
        if (!map.edge_alive(e)) continue;
        const auto [u, v] = g.endpoints(e);
        if (g.is_dummy(u) || g.is_dummy(v)) continue;
        RealEdge r;
        r.u = u;
        r.v = v;
        r.parts = {e, -1};
        r.augmented = e < static_cast<int>(augmented.size()) && augmented[e];
        out.real_of_edge[e] = static_cast<int>(out.real_edges.size());
        out.real_edges.push_back(r);
    }
    for (int ci = 0; ci < static_cast<int>(out.crossings.size()); ++ci) {
        Crossing& c = out.crossings[ci];
        for (int k = 0; k < 2; ++k) {
            RealEdge r;
            r.u = c.corners[k];
            r.v = c.corners[k + 2];
            r.crossing = ci;
            r.parts = {c.spokes[k], c.spokes[k + 2]};
            c.real[k] = static_cast<int>(out.real_edges.size());
            out.real_of_edge[c.spokes[k]] = c.real[k];
            out.real_of_edge[c.spokes[k + 2]] = c.real[k];
            out.real_edges.push_back(r);
        }
    }

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(out.real_edges.size());
    for (const auto& r : out.real_edges) pairs.push_back(std::minmax(r.u, r.v));
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i] == pairs[i - 1] && (i == 1 || pairs[i - 2] != pairs[i])) {
            issues.push_back({ErrorCode::NonSimpleRealGraph, "parallel real edges between " +
                                                                 g.name(pairs[i].first) + " and " +
                                                                 g.name(pairs[i].second)});
        }
    }

    if (!issues.empty()) {
        std::vector<std::string> details;
        for (const auto& i : issues) details.push_back(std::string(to_string(i.code)) + ": " + i.text);
        throw Error(issues.front().code, issues.front().text, std::move(details));
    }

    const int real_n = n - static_cast<int>(out.crossings.size());
    const long long real_m = static_cast<long long>(out.real_edges.size());
    if (real_n >= 4 && real_m > ic_edge_bound(real_n)) {
        out.warnings.push_back("real edge count " + std::to_string(real_m) + " exceeds the IC-planar bound " +
                               std::to_string(ic_edge_bound(real_n)));
    }
    if (g.outer_dart() >= 0) {
        const int outer = face_of[g.outer_dart()];
        for (int d = 0; d < 2 * g.edge_capacity(); ++d) {
            if (face_of[d] == outer && g.is_dummy(map.origin(d))) {
                out.warnings.push_back("crossing at " + g.name(map.origin(d)) + " lies on the outer face");
            }
        }
    }
    out.base = g;
    return out;
}

}  // namespace icdraw
