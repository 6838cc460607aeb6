#include "icdraw/contraction.hpp"

#include <algorithm>

namespace icdraw {

std::vector<int> outside_darts(const PlanarMap& map, const KiteRecord& kite, int i) {
    const int p = kite.corners[i];
    const int to_prev = map.dart_from(kite.sides[(i + 3) % 4], p);
    const int to_next = map.dart_from(kite.sides[i], p);
    std::vector<int> out;
    for (int d = map.cw_next(to_prev); d != to_next; d = map.cw_next(d)) out.push_back(d);
    return out;
}

Contraction contract_kites(const EmbeddedGraph& g, std::span<const KiteRecord> kites) {
    const PlanarMap& src = g.map();
    Contraction c;
    const int nv = g.vertex_capacity();
    c.node_of.assign(nv, -1);
    std::vector<int> kite_of_vertex(nv, -1);
    std::vector<char> blocked(src.edge_capacity(), 0);
    for (int k = 0; k < static_cast<int>(kites.size()); ++k) {
        for (int v : kites[k].corners) kite_of_vertex[v] = k;
        for (int e : kites[k].sides) blocked[e] = 1;
    }
    c.kite_node.assign(kites.size(), -1);
    for (int v = 0; v < nv; ++v) {
        if (!src.vertex_alive(v) || g.is_dummy(v)) continue;
        const int k = kite_of_vertex[v];
        if (k >= 0) {
            if (c.kite_node[k] < 0) {
                c.kite_node[k] = static_cast<int>(c.vertex_of_node.size());
                c.vertex_of_node.push_back(-1);
                c.kite_of_node.push_back(k);
            }
            c.node_of[v] = c.kite_node[k];
        } else {
            c.node_of[v] = static_cast<int>(c.vertex_of_node.size());
            c.vertex_of_node.push_back(v);
            c.kite_of_node.push_back(-1);
        }
    }

    std::vector<std::pair<int, int>> edges;
    c.edge_of_source.assign(src.edge_capacity(), -1);
    for (int e = 0; e < src.edge_capacity(); ++e) {
        if (!src.edge_alive(e) || blocked[e]) continue;
        const int u = src.origin(2 * e);
        const int v = src.head(2 * e);
        if (g.is_dummy(u) || g.is_dummy(v)) continue;
        c.edge_of_source[e] = static_cast<int>(edges.size());
        c.source_edge.push_back(e);
        edges.emplace_back(c.node_of[u], c.node_of[v]);
    }

    const int nodes = static_cast<int>(c.vertex_of_node.size());
    std::vector<std::vector<int>> rotations(nodes);
    for (int node = 0; node < nodes; ++node) {
        auto& rot = rotations[node];
        const int k = c.kite_of_node[node];
        if (k < 0) {
            for (int d : src.darts_around(c.vertex_of_node[node])) rot.push_back(c.edge_of_source[PlanarMap::edge_of(d)]);
        } else {
            for (int i = 0; i < 4; ++i)
                for (int d : outside_darts(src, kites[k], i)) rot.push_back(c.edge_of_source[PlanarMap::edge_of(d)]);
        }
    }
    c.map = PlanarMap::from_rotations(nodes, edges, rotations);

    if (g.outer_dart() >= 0) {
        int d = g.outer_dart();
        do {
            const int ce = c.edge_of_source[PlanarMap::edge_of(d)];
            if (ce >= 0) {
                c.outer_dart = 2 * ce + (d & 1);
                break;
            }
            d = src.face_next(d);
        } while (d != g.outer_dart());
    }
    return c;
}

int biconnected_components(const PlanarMap& map, std::vector<int>& component) {
    const int nv = map.vertex_capacity();
    component.assign(map.edge_capacity(), -1);
    std::vector<int> disc(nv, -1), low(nv, 0);
    std::vector<std::vector<int>> around(nv);
    for (int v = 0; v < nv; ++v)
        if (map.vertex_alive(v)) around[v] = map.darts_around(v);

    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::vector<int> edge_stack;
    int timer = 0;
    int count = 0;
    for (int root = 0; root < nv; ++root) {
        if (!map.vertex_alive(root) || disc[root] >= 0) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const int v = fr.v;
            if (fr.next < around[v].size()) {
                const int d = around[v][fr.next++];
                const int e = PlanarMap::edge_of(d);
                if (e == fr.parent_edge) continue;
                const int w = map.head(d);
                if (disc[w] < 0) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            const int parent_edge = fr.parent_edge;
            stack.pop_back();
            if (stack.empty()) break;
            const int p = stack.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                while (true) {
                    const int e = edge_stack.back();
                    edge_stack.pop_back();
                    component[e] = count;
                    if (e == parent_edge) break;
                }
                ++count;
            }
        }
    }
    return count;
}

}  // namespace icdraw
