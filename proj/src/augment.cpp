#include "icdraw/augment.hpp"

#include <numeric>

#include "icdraw/contraction.hpp"

namespace icdraw {

namespace {

int find_edge_between(const PlanarMap& map, int p, int q) {
    for (int d : map.darts_around(p))
        if (map.head(d) == q) return PlanarMap::edge_of(d);
    return -1;
}

struct UnionFind {
    std::vector<int> parent;
    int add() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
        return a;
    }
};

}  // namespace

std::vector<char> augmented_flags(const ICPlaneGraph& g) {
    std::vector<char> flags(g.base.edge_capacity(), 0);
    for (const auto& r : g.real_edges)
        if (r.augmented && r.parts[1] < 0) flags[r.parts[0]] = 1;
    return flags;
}

void refresh_kites(const ICPlaneGraph& g, std::vector<KiteRecord>& kites) {
    for (auto& k : kites) {
        const Crossing& c = g.crossings[k.crossing];
        k.dummy = c.dummy;
        k.corners = c.corners;
        k.diagonals = c.real;
    }
}

CrossingConfig classify_crossing(const ICPlaneGraph& g, int crossing) {
    const Crossing& c = g.crossings.at(crossing);
    const PlanarMap& map = g.base.map();
    std::vector<int> face_of;
    const int faces = map.label_faces(face_of);
    std::vector<std::vector<int>> darts_of(faces);
    for (int d = 0; d < static_cast<int>(face_of.size()); ++d)
        if (face_of[d] >= 0) darts_of[face_of[d]].push_back(d);
    const int outer = g.base.outer_dart() >= 0 ? face_of[g.base.outer_dart()] : -1;

    CrossingConfig cfg;
    for (int i = 0; i < 4; ++i) {
        const int p = c.corners[i];
        const int q = c.corners[(i + 1) % 4];
        const int side = find_edge_between(map, p, q);
        if (side < 0) continue;
        // The cycle p-x-q-p splits the plane; the wedge between the two
        // spokes lies on one side, the other two endpoints on the other.
        const int blocked[3] = {c.spokes[i], c.spokes[(i + 1) % 4], side};
        std::vector<char> seen(faces, 0);
        std::vector<int> queue{face_of[map.dart_from(c.spokes[i], p)]};
        seen[queue[0]] = 1;
        bool outer_inside = false;
        for (std::size_t h = 0; h < queue.size() && !outer_inside; ++h) {
            const int f = queue[h];
            if (f == outer) outer_inside = true;
            for (int d : darts_of[f]) {
                const int e = PlanarMap::edge_of(d);
                if (e == blocked[0] || e == blocked[1] || e == blocked[2]) continue;
                const int nf = face_of[PlanarMap::twin(d)];
                if (!seen[nf]) {
                    seen[nf] = 1;
                    queue.push_back(nf);
                }
            }
        }
        if (outer_inside) {
            cfg.tag = CrossingConfig::Tag::B;
            cfg.enclosing_edge = side;
            cfg.witness = "edge " + g.base.name(p) + "-" + g.base.name(q) + " encloses " +
                          g.base.name(c.corners[(i + 2) % 4]) + " and " + g.base.name(c.corners[(i + 3) % 4]);
            return cfg;
        }
    }
    cfg.witness = "no side edge encloses the crossing";
    return cfg;
}

bool kite_is_empty(const EmbeddedGraph& g, const KiteRecord& kite) {
    const PlanarMap& map = g.map();
    const int x = kite.dummy;
    if (map.degree(x) != 4) return false;
    for (int i = 0; i < 4; ++i) {
        const int p = kite.corners[i];
        const int q = kite.corners[(i + 1) % 4];
        const int side = kite.sides[i];
        if (side < 0 || !map.edge_alive(side)) return false;
        int dp = -1;
        for (int d : map.darts_around(p))
            if (map.head(d) == x) dp = d;
        if (dp < 0) return false;
        const int d1 = map.face_next(dp);
        const int d2 = map.face_next(d1);
        if (map.head(d1) != q || d2 != map.dart_from(side, q) || map.face_next(d2) != dp) return false;
        const int outer = g.outer_dart();
        if (outer == dp || outer == d1 || outer == d2) return false;
    }
    return true;
}

KiteAugmentation make_empty_kites(const ICPlaneGraph& g) {
    KiteAugmentation out;
    EmbeddedGraph G = g.base;
    PlanarMap& M = G.mutable_map();
    std::vector<char> flags = augmented_flags(g);
    int outer = G.outer_dart();

    for (int ci = 0; ci < g.num_crossings(); ++ci) {
        const Crossing& c = g.crossings[ci];
        KiteRecord kite;
        kite.crossing = ci;
        kite.dummy = c.dummy;
        kite.corners = c.corners;
        for (int i = 0; i < 4; ++i) {
            const int p = c.corners[i];
            const int q = c.corners[(i + 1) % 4];
            const int dp = M.dart_from(c.spokes[i], p);
            const int dq = M.dart_from(c.spokes[(i + 1) % 4], q);
            const int d1 = M.cw_next(dq);
            if (M.head(d1) == p && M.cw_prev(dp) == PlanarMap::twin(d1)) {
                // Already bounds the triangle p-x-q.
                kite.sides[i] = PlanarMap::edge_of(d1);
                if (outer == dp || outer == PlanarMap::twin(dq) || outer == d1) outer = PlanarMap::twin(d1);
                continue;
            }
            int side = find_edge_between(M, p, q);
            if (side >= 0) {
                if (PlanarMap::edge_of(outer) == side) {
                    int d = M.face_next(outer);
                    while (PlanarMap::edge_of(d) == side) d = M.face_next(d);
                    outer = d;
                }
                M.remove_edge(side);
                M.reinsert_edge(side, p, q, M.cw_prev(dp), dq);
                ++out.rerouted_edges;
            } else {
                side = M.add_edge(p, q, M.cw_prev(dp), dq);
                flags.push_back(1);
                ++out.added_edges;
            }
            if (outer == dp || outer == PlanarMap::twin(dq)) outer = 2 * side;
            kite.sides[i] = side;
        }
        out.kites.push_back(kite);
    }
    G.set_outer_dart(outer);
    out.graph = validate_ic_planar(G, flags);
    refresh_kites(out.graph, out.kites);
    for (const auto& k : out.kites) {
        if (!kite_is_empty(out.graph.base, k))
            throw Error(ErrorCode::AugmentationFailed, "kite at " + G.name(k.dummy) + " is not empty");
    }
    return out;
}

BiconnectResult biconnect(const ICPlaneGraph& g, std::span<const KiteRecord> kites) {
    BiconnectResult out;
    EmbeddedGraph G = g.base;
    PlanarMap& M = G.mutable_map();
    std::vector<char> flags = augmented_flags(g);

    // Every corner gets an edge leaving the kite.
    for (const auto& k : kites) {
        for (int i = 0; i < 4; ++i) {
            if (!outside_darts(M, k, i).empty()) continue;
            const int p = k.corners[i];
            const int to_prev = M.dart_from(k.sides[(i + 3) % 4], p);
            const int start = M.cw_next(to_prev);  // p -> next corner
            int d = start;
            int found = -1;
            do {
                if (k.corner_index(M.head(d)) < 0) {
                    found = d;
                    break;
                }
                d = M.face_next(d);
            } while (d != start);
            if (found < 0) continue;  // the whole graph is this kite
            const int w = M.head(found);
            M.add_edge(p, w, to_prev, PlanarMap::twin(found));
            flags.push_back(1);
            ++out.added_edges;
        }
    }

    // Face-walk augmentation on the kite-contracted graph, mirrored in G.
    Contraction con = contract_kites(G, kites);
    PlanarMap& C = con.map;
    std::vector<int> comp;
    const int blocks = biconnected_components(C, comp);
    UnionFind uf;
    for (int b = 0; b < blocks; ++b) uf.add();
    for (int v = 0; v < C.vertex_capacity(); ++v) {
        if (C.degree(v) < 2) continue;
        int d1 = C.first_dart(v);
        const int deg = C.degree(v);
        for (int step = 0; step < deg; ++step) {
            const int d2 = C.cw_next(d1);
            const int b1 = uf.find(comp[PlanarMap::edge_of(d1)]);
            const int b2 = uf.find(comp[PlanarMap::edge_of(d2)]);
            if (b1 != b2) {
                const int u = C.head(d1);
                const int w = C.head(d2);
                const int u_to_v = PlanarMap::twin(d1);
                const int w_to_v = PlanarMap::twin(d2);
                const int su = con.source_dart(u_to_v);
                const int sw = con.source_dart(w_to_v);
                const int se = M.add_edge(M.origin(su), M.origin(sw), M.cw_prev(su), sw);
                flags.push_back(1);
                ++out.added_edges;
                C.add_edge(u, w, C.cw_prev(u_to_v), w_to_v);
                con.source_edge.push_back(se);
                comp.push_back(uf.unite(b1, b2));
            }
            d1 = d2;
        }
    }

    out.graph = validate_ic_planar(G, flags);
    out.kites.assign(kites.begin(), kites.end());
    refresh_kites(out.graph, out.kites);
    return out;
}

}  // namespace icdraw
