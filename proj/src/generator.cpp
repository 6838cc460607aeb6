#include "icdraw/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace icdraw {

namespace {

int find_edge(const PlanarMap& m, int u, int v) {
    // Scan the smaller rotation.
    if (m.degree(u) > m.degree(v)) std::swap(u, v);
    for (int d : m.darts_around(u))
        if (m.head(d) == v) return PlanarMap::edge_of(d);
    return -1;
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

}  // namespace

GeneratedInstance generate(const InstanceSpec& spec) {
    if (spec.n < 3) throw Error(ErrorCode::SchemaError, "generator needs n >= 3");
    if (spec.crossing_fraction < 0 || spec.crossing_fraction > 0.25)
        throw Error(ErrorCode::SchemaError, "crossing fraction must lie in [0, 1/4]");
    std::mt19937_64 rng(spec.seed);
    auto below = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
    auto coin = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };

    const int n = spec.n;
    PlanarMap m(3);
    const int e01 = m.add_edge(0, 1, -1, -1);
    const int e12 = m.add_edge(1, 2, 2 * e01 + 1, -1);
    m.add_edge(2, 0, 2 * e12 + 1, 2 * e01);

    // Split a random face (every face is a triangle).
    for (int w = 3; w < n; ++w) {
        std::size_t d;
        do d = below(2 * static_cast<std::size_t>(m.edge_capacity()));
        while (!m.edge_alive(PlanarMap::edge_of(static_cast<int>(d))));
        const int d1 = static_cast<int>(d);
        const int d2 = m.face_next(d1);
        const int d3 = m.face_next(d2);
        const int a = m.origin(d1), b = m.origin(d2), c = m.origin(d3);
        m.add_vertex();
        const int ea = m.add_edge(w, a, -1, PlanarMap::twin(d3));
        const int ec = m.add_edge(w, c, 2 * ea, PlanarMap::twin(d2));
        m.add_edge(w, b, 2 * ec, PlanarMap::twin(d1));
    }

    // Random flips diversify the degree distribution.
    for (int step = 0; step < n; ++step) {
        const int e = static_cast<int>(below(m.edge_capacity()));
        const int d = 2 * e;
        const int u = m.origin(d), v = m.head(d);
        const int d1 = m.face_next(d), t1 = m.face_next(PlanarMap::twin(d));
        const int x = m.head(d1), y = m.head(t1);
        if (x == y || m.degree(u) <= 3 || m.degree(v) <= 3 || find_edge(m, x, y) >= 0) continue;
        m.remove_edge(e);
        m.reinsert_edge(e, x, y, PlanarMap::twin(d1), PlanarMap::twin(t1));
    }

    std::vector<char> dummy(n, 0);

    // Turn vertex-disjoint quadrilaterals into crossings.
    GeneratedInstance out;
    out.target_crossings = static_cast<int>(spec.crossing_fraction * n);
    std::vector<char> used(n, 0);
    std::vector<int> order(m.edge_capacity());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> keep_edge;
    for (int e : order) {
        if (out.achieved_crossings >= out.target_crossings) break;
        const int d = 2 * e;
        const int d1 = m.face_next(d), d2 = m.face_next(d1);
        const int t = PlanarMap::twin(d);
        const int t1 = m.face_next(t), t2 = m.face_next(t1);
        const int u = m.origin(d), v = m.head(d), x = m.head(d1), y = m.head(t1);
        if (used[u] || used[v] || used[x] || used[y] || x == y || find_edge(m, x, y) >= 0) continue;
        used[u] = used[v] = used[x] = used[y] = 1;
        m.remove_edge(e);
        const int X = m.add_vertex();
        dummy.push_back(1);
        const int sv = m.add_edge(X, v, -1, PlanarMap::twin(t2));
        const int sy = m.add_edge(X, y, 2 * sv, PlanarMap::twin(t1));
        const int su = m.add_edge(X, u, 2 * sy, PlanarMap::twin(d2));
        m.add_edge(X, x, 2 * su, PlanarMap::twin(d1));
        ++out.achieved_crossings;
    }

    // Optionally thin out uncrossed edges while keeping the graph connected.
    if (spec.edge_keep < 1.0) {
        const int nv = m.vertex_capacity();
        Dsu dsu(nv);
        std::vector<int> plain;
        for (int e = 0; e < m.edge_capacity(); ++e) {
            if (!m.edge_alive(e)) continue;
            const int a = m.origin(2 * e), b = m.head(2 * e);
            if (dummy[a] || dummy[b]) dsu.unite(a, b);
            else plain.push_back(e);
        }
        std::shuffle(plain.begin(), plain.end(), rng);
        for (int e : plain) {
            const int a = m.origin(2 * e), b = m.head(2 * e);
            if (dsu.unite(a, b)) continue;
            if (!coin(spec.edge_keep)) m.remove_edge(e);
        }
    }

    // Renumber vertices and edges in breadth-first order for locality, and
    // pick an outer face free of dummies if possible.
    const int nv = m.vertex_capacity();
    std::vector<int> vorder, new_v(nv, -1), new_id(m.edge_capacity(), -1);
    std::vector<std::pair<int, int>> edges;
    vorder.push_back(0);
    new_v[0] = 0;
    for (std::size_t h = 0; h < vorder.size(); ++h) {
        for (int d : m.darts_around(vorder[h])) {
            const int e = PlanarMap::edge_of(d);
            if (new_id[e] < 0) {
                new_id[e] = static_cast<int>(edges.size());
                edges.emplace_back(m.origin(2 * e), m.head(2 * e));
            }
            const int w = m.head(d);
            if (new_v[w] < 0) {
                new_v[w] = static_cast<int>(vorder.size());
                vorder.push_back(w);
            }
        }
    }
    for (auto& [a, b] : edges) a = new_v[a], b = new_v[b];
    std::vector<std::string> final_names;
    std::vector<char> final_dummy;
    std::vector<std::vector<int>> rotations;
    int real_count = 0, dummy_count = 0;
    for (int v : vorder) {
        final_dummy.push_back(dummy[v]);
        final_names.push_back(dummy[v] ? "x" + std::to_string(dummy_count++) : "v" + std::to_string(real_count++));
        rotations.emplace_back();
        for (int d : m.darts_around(v)) rotations.back().push_back(new_id[PlanarMap::edge_of(d)]);
    }
    int outer = 0;
    for (int e = 0; e < m.edge_capacity(); ++e) {
        if (!m.edge_alive(e)) continue;
        bool clean = true;
        int d = 2 * e;
        do {
            clean &= !dummy[m.origin(d)];
            d = m.face_next(d);
        } while (d != 2 * e);
        if (clean) {
            outer = new_id[e];
            break;
        }
    }
    const EmbeddedGraph g = build_embedded_graph(final_names, edges, rotations, final_dummy, outer);
    out.graph = validate_ic_planar(g);
    return out;
}

}  // namespace icdraw
