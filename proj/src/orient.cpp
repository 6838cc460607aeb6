#include "icdraw/orient.hpp"

#include <algorithm>
#include <queue>

namespace icdraw {

std::string_view to_string(ExpansionCase c) {
    switch (c) {
        case ExpansionCase::Case1a: return "1a";
        case ExpansionCase::Case1b: return "1b";
        case ExpansionCase::Case1c: return "1c";
        case ExpansionCase::Case2a: return "2a";
        case ExpansionCase::Case2b: return "2b";
        case ExpansionCase::Case3a: return "3a";
        case ExpansionCase::Case3b: return "3b";
        case ExpansionCase::SourceSink: return "source/sink";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Expansion case table
// ---------------------------------------------------------------------------

namespace {

constexpr CornerPattern kIn{CornerKind::AllIn, Boundary::InThenOut};
constexpr CornerPattern kOut{CornerKind::AllOut, Boundary::InThenOut};
constexpr CornerPattern kInOut{CornerKind::Mixed, Boundary::InThenOut};
constexpr CornerPattern kOutIn{CornerKind::Mixed, Boundary::OutThenIn};
constexpr CornerPattern kInOutIn{CornerKind::Mixed, Boundary::InOutIn};

struct TableEntry {
    std::array<CornerPattern, 4> pattern;
    int origin;
    int destination;
    ExpansionCase which;
};

// Literal configurations with corners labeled a, b, c, d clockwise.
const TableEntry kTable[] = {
    {{kOut, kOut, kOut, kIn}, 3, 1, ExpansionCase::Case1a},
    {{kIn, kIn, kIn, kOut}, 1, 3, ExpansionCase::Case1b},
    {{kOut, kOut, kIn, kIn}, 2, 0, ExpansionCase::Case1c},
    {{kInOut, kIn, kIn, kIn}, 2, 0, ExpansionCase::Case2a},
    {{kInOut, kOut, kOut, kOut}, 0, 2, ExpansionCase::Case2a},
    {{kInOut, kOut, kIn, kIn}, 3, 1, ExpansionCase::Case2b},
    {{kInOut, kOut, kOut, kIn}, 3, 1, ExpansionCase::Case2b},
    {{kInOut, kOutIn, kIn, kIn}, 2, 0, ExpansionCase::Case3a},
    {{kInOut, kOut, kOutIn, kIn}, 3, 1, ExpansionCase::Case3b},
    // A single mixed corner holding every outgoing edge between two runs
    // of incoming ones; decided like the all-in variant of 2a.
    {{kInOutIn, kIn, kIn, kIn}, 2, 0, ExpansionCase::Case2a},
};

Boundary mirror(Boundary b) {
    switch (b) {
        case Boundary::InThenOut: return Boundary::OutThenIn;
        case Boundary::OutThenIn: return Boundary::InThenOut;
        default: return b;
    }
}

Boundary reverse(Boundary b) {
    switch (b) {
        case Boundary::InThenOut: return Boundary::OutThenIn;
        case Boundary::OutThenIn: return Boundary::InThenOut;
        case Boundary::InOutIn: return Boundary::OutInOut;
        case Boundary::OutInOut: return Boundary::InOutIn;
    }
    return b;
}

CornerPattern transform(CornerPattern c, bool reflect, bool reversed) {
    if (c.kind == CornerKind::Mixed) {
        if (reflect) c.boundary = mirror(c.boundary);
        if (reversed) c.boundary = reverse(c.boundary);
    } else {
        c.boundary = Boundary::InThenOut;
        if (reversed) {
            if (c.kind == CornerKind::AllIn) c.kind = CornerKind::AllOut;
            else if (c.kind == CornerKind::AllOut) c.kind = CornerKind::AllIn;
        }
    }
    return c;
}

// Index of the original corner that lands on position j.
int source_index(int j, int rot, bool reflect) { return reflect ? (rot - j + 8) % 4 : (rot + j) % 4; }

ExpansionDecision decide_pole(const ExpansionPattern& p) {
    // The new pole must stay on the outer face; its opposite corner must
    // carry an edge of the right direction.
    const bool source = p.role == ExpansionPattern::Role::Source;
    const bool sink = p.role == ExpansionPattern::Role::Sink;
    for (const auto& c : p.corners) {
        if (source && c.kind != CornerKind::AllOut && c.kind != CornerKind::None)
            throw Error(ErrorCode::UnmatchedPattern, "source kite has a corner with incoming edges");
        if (sink && c.kind != CornerKind::AllIn && c.kind != CornerKind::None)
            throw Error(ErrorCode::UnmatchedPattern, "sink kite has a corner with outgoing edges");
    }
    ExpansionDecision d;
    d.which = ExpansionCase::SourceSink;
    if (p.role == ExpansionPattern::Role::SourceSink) {
        for (int i = 0; i < 4; ++i) {
            if (p.on_outer_face[i] && p.on_outer_face[(i + 2) % 4]) {
                d.origin = i;
                d.destination = (i + 2) % 4;
                return d;
            }
        }
        d.origin = 0;
        d.destination = 2;
        return d;
    }
    const CornerKind wanted = source ? CornerKind::AllOut : CornerKind::AllIn;
    int fallback = -1;
    for (int i = 0; i < 4; ++i) {
        // i is the corner carrying the edge ("a"); its opposite becomes the pole.
        if (p.corners[i].kind != wanted) continue;
        if (fallback < 0) fallback = i;
        if (p.on_outer_face[(i + 2) % 4]) {
            fallback = i;
            break;
        }
    }
    if (fallback < 0) throw Error(ErrorCode::UnmatchedPattern, "pole kite has no incident edge");
    const int a = fallback;
    const int c = (a + 2) % 4;
    if (source) {
        d.destination = a;
        d.origin = c;
    } else {
        d.origin = a;
        d.destination = c;
    }
    return d;
}

}  // namespace

ExpansionDecision orient_expanded_kite(const ExpansionPattern& pattern) {
    if (pattern.role != ExpansionPattern::Role::Inner) return decide_pole(pattern);
    for (int rev = 0; rev < 2; ++rev) {
        for (const auto& entry : kTable) {
            for (int refl = 0; refl < 2; ++refl) {
                for (int rot = 0; rot < 4; ++rot) {
                    bool match = true;
                    for (int j = 0; j < 4 && match; ++j) {
                        const auto c = transform(pattern.corners[source_index(j, rot, refl)], refl, rev);
                        match = c == entry.pattern[j];
                    }
                    if (!match) continue;
                    ExpansionDecision d;
                    d.which = entry.which;
                    d.origin = source_index(entry.origin, rot, refl);
                    d.destination = source_index(entry.destination, rot, refl);
                    if (rev) std::swap(d.origin, d.destination);
                    return d;
                }
            }
        }
    }
    throw Error(ErrorCode::UnmatchedPattern, "corner pattern is not bipolar");
}

// ---------------------------------------------------------------------------
// Pipeline steps
// ---------------------------------------------------------------------------

SplitResult split_crossings(const ICPlaneGraph& g, std::span<const KiteRecord> kites) {
    SplitResult out;
    out.plane = g.base;
    out.real_of_edge = g.real_of_edge;
    PlanarMap& map = out.plane.mutable_map();
    for (const auto& c : g.crossings) {
        for (int e : c.spokes) {
            map.remove_edge(e);
            out.real_of_edge[e] = -1;
        }
        map.remove_vertex(c.dummy);
        out.crossing_pairs.push_back(c.real);
    }
    (void)kites;
    return out;
}

StOrientation st_orient(const PlanarMap& map, int outer_dart) {
    StOrientation o;
    o.tail.assign(map.edge_capacity(), -1);
    o.number.assign(map.vertex_capacity(), -1);
    const int nv = map.vertex_capacity();
    if (map.num_edges() == 0) {
        for (int v = 0; v < nv; ++v) {
            if (map.vertex_alive(v)) {
                if (o.s >= 0) throw Error(ErrorCode::NotBiconnected, "edgeless graph with several vertices");
                o.s = o.t = v;
                o.number[v] = 0;
            }
        }
        return o;
    }
    if (outer_dart < 0) throw Error(ErrorCode::NotBiconnected, "no outer face");

    int st_edge = PlanarMap::edge_of(outer_dart);
    for (int d = map.face_next(outer_dart); d != outer_dart; d = map.face_next(d))
        st_edge = std::min(st_edge, PlanarMap::edge_of(d));
    o.s = map.origin(2 * st_edge);
    o.t = map.head(2 * st_edge);

    std::vector<int> comp;
    if (biconnected_components(map, comp) != 1)
        throw Error(ErrorCode::NotBiconnected, "contracted graph has a cut vertex");

    // Depth-first search from s whose first tree edge is s-t.
    std::vector<int> pre(nv, -1), parent(nv, -1), low(nv, -1);
    std::vector<int> order;
    order.reserve(map.num_vertices());
    struct Frame {
        int v;
        int parent_edge;
        std::vector<int> darts;
        std::size_t next;
    };
    std::vector<Frame> stack;
    auto enter = [&](int v, int pe) {
        pre[v] = static_cast<int>(order.size());
        order.push_back(v);
        low[v] = v;
        stack.push_back({v, pe, map.darts_around(v), 0});
    };
    enter(o.s, -1);
    {
        auto& ds = stack.back().darts;
        std::rotate(ds.begin(), std::find(ds.begin(), ds.end(), 2 * st_edge), ds.end());
    }
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.next < fr.darts.size()) {
            const int d = fr.darts[fr.next++];
            const int e = PlanarMap::edge_of(d);
            if (e == fr.parent_edge) continue;
            const int w = map.head(d);
            const int v = fr.v;
            if (pre[w] < 0) {
                parent[w] = v;
                enter(w, e);
            } else if (pre[w] < pre[low[v]]) {
                low[v] = w;
            }
            continue;
        }
        const int v = fr.v;
        stack.pop_back();
        if (!stack.empty()) {
            const int p = stack.back().v;
            if (pre[low[v]] < pre[low[p]]) low[p] = low[v];
        }
    }

    // Tarjan's list construction: sign[w] tells on which side of w the
    // later children hang.
    std::vector<int> next(nv, -1), prev(nv, -1);
    std::vector<char> minus(nv, 0);
    next[o.s] = o.t;
    prev[o.t] = o.s;
    minus[o.s] = 1;
    for (std::size_t i = 2; i < order.size(); ++i) {
        const int v = order[i];
        const int p = parent[v];
        if (minus[low[v]]) {
            const int before = prev[p];
            next[before] = v;
            prev[v] = before;
            next[v] = p;
            prev[p] = v;
            minus[p] = 0;
        } else {
            const int after = next[p];
            next[p] = v;
            prev[v] = p;
            next[v] = after;
            if (after >= 0) prev[after] = v;
            minus[p] = 1;
        }
    }
    int k = 0;
    for (int v = o.s; v >= 0; v = next[v]) o.number[v] = k++;
    for (int e = 0; e < map.edge_capacity(); ++e) {
        if (!map.edge_alive(e)) continue;
        const int u = map.origin(2 * e);
        const int v = map.head(2 * e);
        o.tail[e] = o.number[u] < o.number[v] ? u : v;
    }
    return o;
}

std::vector<int> longest_path_numbering(const PlanarMap& map, std::span<const int> tail) {
    const int nv = map.vertex_capacity();
    std::vector<int> indeg(nv, 0), number(nv, -1);
    for (int e = 0; e < map.edge_capacity(); ++e)
        if (map.edge_alive(e)) ++indeg[map.origin(2 * e) == tail[e] ? map.head(2 * e) : map.origin(2 * e)];
    std::vector<int> queue;
    for (int v = 0; v < nv; ++v) {
        if (map.vertex_alive(v) && indeg[v] == 0) {
            queue.push_back(v);
            number[v] = 0;
        }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int v = queue[h];
        for (int d : map.darts_around(v)) {
            if (tail[PlanarMap::edge_of(d)] != v) continue;
            const int w = map.head(d);
            number[w] = std::max(number[w], number[v] + 1);
            if (--indeg[w] == 0) queue.push_back(w);
        }
    }
    if (static_cast<int>(queue.size()) != map.num_vertices())
        throw Error(ErrorCode::InvariantViolated, "orientation has a directed cycle");
    return number;
}

namespace {

CornerPattern summarize(const std::vector<char>& outgoing) {
    CornerPattern c;
    if (outgoing.empty()) return c;
    int runs = 1;
    for (std::size_t i = 1; i < outgoing.size(); ++i)
        if (outgoing[i] != outgoing[i - 1]) ++runs;
    const bool first_out = outgoing.front() != 0;
    if (runs == 1) {
        c.kind = first_out ? CornerKind::AllOut : CornerKind::AllIn;
        return c;
    }
    c.kind = CornerKind::Mixed;
    if (runs == 2) c.boundary = first_out ? Boundary::OutThenIn : Boundary::InThenOut;
    else if (runs == 3) c.boundary = first_out ? Boundary::OutInOut : Boundary::InOutIn;
    else throw Error(ErrorCode::UnmatchedPattern, "kite corner alternates edge directions more than twice");
    return c;
}

}  // namespace

ExpansionPattern expansion_pattern(const EmbeddedGraph& plane, const Contraction& contracted,
                                   const StOrientation& contracted_orient, const KiteRecord& kite, int kite_index) {
    ExpansionPattern p;
    const PlanarMap& map = plane.map();
    const int node = contracted.kite_node[kite_index];
    if (node == contracted_orient.s && node == contracted_orient.t) p.role = ExpansionPattern::Role::SourceSink;
    else if (node == contracted_orient.s) p.role = ExpansionPattern::Role::Source;
    else if (node == contracted_orient.t) p.role = ExpansionPattern::Role::Sink;
    for (int i = 0; i < 4; ++i) {
        std::vector<char> outgoing;
        for (int d : outside_darts(map, kite, i)) {
            const int ce = contracted.edge_of_source[PlanarMap::edge_of(d)];
            outgoing.push_back(contracted_orient.tail[ce] == node ? 1 : 0);
        }
        p.corners[i] = summarize(outgoing);
    }
    // Corners on the outer face.
    p.on_outer_face = {false, false, false, false};
    if (plane.outer_dart() >= 0) {
        const int start = plane.outer_dart();
        int d = start;
        do {
            const int i = kite.corner_index(map.origin(d));
            if (i >= 0) p.on_outer_face[i] = true;
            d = map.face_next(d);
        } while (d != start);
    }
    return p;
}

StOrientation expand_all(const EmbeddedGraph& plane, const Contraction& contracted, const StOrientation& contracted_orient,
                         std::vector<KiteRecord>& kites, ExpansionStats* stats) {
    const PlanarMap& map = plane.map();
    StOrientation o;
    o.tail.assign(map.edge_capacity(), -1);
    const PlanarMap& cmap = contracted.map;
    for (int ce = 0; ce < cmap.edge_capacity(); ++ce) {
        if (!cmap.edge_alive(ce)) continue;
        const int e = contracted.source_edge[ce];
        const bool forward = contracted_orient.tail[ce] == cmap.origin(2 * ce);
        o.tail[e] = forward ? map.origin(2 * e) : map.head(2 * e);
    }

    for (int k = 0; k < static_cast<int>(kites.size()); ++k) {
        KiteRecord& kite = kites[k];
        const ExpansionPattern pattern = expansion_pattern(plane, contracted, contracted_orient, kite, k);
        const ExpansionDecision dec = orient_expanded_kite(pattern);
        kite.origin = kite.corners[dec.origin];
        kite.destination = kite.corners[dec.destination];
        for (int i = 0; i < 4; ++i) {
            const int e = kite.sides[i];
            const int p = kite.corners[i];
            const int q = kite.corners[(i + 1) % 4];
            // Sides touching the origin leave it; the others enter the destination.
            o.tail[e] = (p == kite.origin || q == kite.destination) ? p : q;
        }
        if (stats) ++stats->cases[dec.which];

        // I2: two directed paths of length two from origin to destination.
        for (int i = 0; i < 4; ++i) {
            const int p = kite.corners[i];
            const int q = kite.corners[(i + 1) % 4];
            const int tail = o.tail[kite.sides[i]];
            const bool ok = (p == kite.origin || q == kite.origin) ? tail == kite.origin
                                                                   : tail != kite.destination;
            if (!ok) throw Error(ErrorCode::InvariantViolated, "I2: kite face is not two paths of length two");
        }
        // I1: only the corner replacing a pole may lack in- or out-edges.
        for (int i = 0; i < 4; ++i) {
            const int v = kite.corners[i];
            int in = 0, out = 0;
            for (int d : map.darts_around(v)) (o.tail[PlanarMap::edge_of(d)] == v ? out : in)++;
            const bool may_lack_in = v == kite.origin && (pattern.role == ExpansionPattern::Role::Source ||
                                                          pattern.role == ExpansionPattern::Role::SourceSink);
            const bool may_lack_out = v == kite.destination && (pattern.role == ExpansionPattern::Role::Sink ||
                                                                pattern.role == ExpansionPattern::Role::SourceSink);
            if ((in == 0 && !may_lack_in) || (out == 0 && !may_lack_out))
                throw Error(ErrorCode::InvariantViolated, "I1: expansion created an extra source or sink at " + plane.name(v));
        }
        if (stats) ++stats->invariant_checks;
    }

    o.number = longest_path_numbering(map, o.tail);
    for (int v = 0; v < map.vertex_capacity(); ++v) {
        if (!map.vertex_alive(v)) continue;
        int in = 0, out = 0;
        for (int d : map.darts_around(v)) (o.tail[PlanarMap::edge_of(d)] == v ? out : in)++;
        if (in == 0) {
            if (o.s >= 0) throw Error(ErrorCode::InvariantViolated, "I1: more than one source");
            o.s = v;
        }
        if (out == 0) {
            if (o.t >= 0) throw Error(ErrorCode::InvariantViolated, "I1: more than one sink");
            o.t = v;
        }
    }
    return o;
}

PlusGraph reinsert_diagonals(const EmbeddedGraph& plane, const StOrientation& orientation,
                             std::span<const int> real_of_edge, std::vector<KiteRecord>& kites) {
    PlusGraph out;
    out.graph = plane;
    out.orientation = orientation;
    out.real_of_edge.assign(real_of_edge.begin(), real_of_edge.end());
    PlanarMap& map = out.graph.mutable_map();
    for (auto& kite : kites) {
        const int oi = kite.corner_index(kite.origin);
        const int zi = kite.corner_index(kite.destination);
        const int o = kite.origin;
        const int z = kite.destination;
        const int e = map.add_edge(o, z, map.dart_from(kite.sides[oi], o), map.dart_from(kite.sides[zi], z));
        out.orientation.tail.push_back(o);
        out.real_of_edge.push_back(kite.diagonals[(oi % 2 == 0) ? 0 : 1]);
        kite.left = map.head(map.face_next(2 * e));
        kite.right = kite.corners[(kite.corner_index(kite.left) + 2) % 4];
    }
    return out;
}

OrientResult orient(const ICPlaneGraph& augmented, std::vector<KiteRecord> kites) {
    OrientResult r;
    r.split = split_crossings(augmented, kites);
    r.contracted = contract_kite_faces(r.split.plane, kites);
    r.contracted_orientation = st_orient(r.contracted.map, r.contracted.outer_dart);
    r.plane_orientation = expand_all(r.split.plane, r.contracted, r.contracted_orientation, kites, &r.stats);
    r.plus = reinsert_diagonals(r.split.plane, r.plane_orientation, r.split.real_of_edge, kites);
    r.kites = std::move(kites);
    return r;
}

}  // namespace icdraw
