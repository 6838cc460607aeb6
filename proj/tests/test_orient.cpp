#include "doctest.h"

#include <functional>

#include "icdraw/generator.hpp"
#include "icdraw/io.hpp"
#include "icdraw/orient.hpp"
#include "icdraw/pipeline.hpp"
#include "icdraw/verify.hpp"
#include "support.hpp"

using namespace icdraw;

namespace {

constexpr CornerPattern I{CornerKind::AllIn, Boundary::InThenOut};
constexpr CornerPattern O{CornerKind::AllOut, Boundary::InThenOut};
constexpr CornerPattern IO{CornerKind::Mixed, Boundary::InThenOut};
constexpr CornerPattern OI{CornerKind::Mixed, Boundary::OutThenIn};

ExpansionPattern inner(CornerPattern a, CornerPattern b, CornerPattern c, CornerPattern d) {
    ExpansionPattern p;
    p.corners = {a, b, c, d};
    return p;
}

std::pair<int, int> decide(const ExpansionPattern& p) {
    const auto d = orient_expanded_kite(p);
    return {d.origin, d.destination};
}

// Directions (true = leaving the kite) of the outside edges at each
// corner, in rotation order.
using Sides = std::array<std::vector<bool>, 4>;

CornerPattern summary(const std::vector<bool>& out) {
    if (out.empty()) return {};
    int changes = 0;
    for (std::size_t i = 1; i < out.size(); ++i) changes += out[i] != out[i - 1];
    if (changes == 0) return out[0] ? O : I;
    if (changes == 1) return out[0] ? OI : IO;
    return {CornerKind::Mixed, out[0] ? Boundary::OutInOut : Boundary::InOutIn};
}

// Brute-force check of a decision: every corner keeps its incoming and
// outgoing edges consecutive (sides included) and only allowed poles lack
// an in- or out-edge.
bool decision_is_sound(const Sides& sides, int origin, int destination, bool source_ok, bool sink_ok) {
    if ((origin + 2) % 4 != destination) return false;
    for (int i = 0; i < 4; ++i) {
        const int next = (i + 1) % 4, prev = (i + 3) % 4;
        auto leaves = [&](int p, int q) { return p == origin || q == destination; };
        // Rotation at a corner in P: side to next, side to prev, outside edges.
        std::vector<bool> seq{leaves(i, next), !leaves(prev, i)};
        seq.insert(seq.end(), sides[i].begin(), sides[i].end());
        int changes = 0, outs = 0;
        for (std::size_t k = 0; k < seq.size(); ++k) {
            changes += seq[k] != seq[(k + 1) % seq.size()];
            outs += seq[k];
        }
        if (changes > 2) return false;
        const bool no_in = outs == static_cast<int>(seq.size());
        const bool no_out = outs == 0;
        if (no_in && !(source_ok && i == origin)) return false;
        if (no_out && !(sink_ok && i == destination)) return false;
    }
    return true;
}

// Every bipolar arrangement of 1..3 outside edges per corner.
void for_each_inner_arrangement(const std::function<void(const Sides&)>& f) {
    for (int code = 0; code < 81; ++code) {
        std::array<int, 4> count;
        int total = 0;
        for (int i = 0, c = code; i < 4; ++i, c /= 3) total += count[i] = 1 + c % 3;
        for (int ins = 1; ins < total; ++ins) {
            for (int start = 0; start < total; ++start) {
                std::vector<bool> cyc(total, true);
                for (int k = 0; k < ins; ++k) cyc[(start + k) % total] = false;
                Sides s;
                int pos = 0;
                for (int i = 0; i < 4; ++i)
                    for (int k = 0; k < count[i]; ++k) s[i].push_back(cyc[pos++]);
                f(s);
            }
        }
    }
}

ExpansionPattern pattern_of(const Sides& s) {
    ExpansionPattern p;
    for (int i = 0; i < 4; ++i) p.corners[i] = summary(s[i]);
    return p;
}

}  // namespace

TEST_SUITE("orient") {
    TEST_CASE("literal case configurations") {
        // Corners a, b, c, d = 0, 1, 2, 3.
        CHECK(decide(inner(O, O, O, I)) == std::pair{3, 1});   // 1a: origin d, destination b
        CHECK(decide(inner(I, I, I, O)) == std::pair{1, 3});   // 1b
        CHECK(decide(inner(O, O, I, I)) == std::pair{2, 0});   // 1c: origin c, destination a
        CHECK(decide(inner(IO, I, I, I)) == std::pair{2, 0});  // 2a, three all-in
        CHECK(decide(inner(IO, O, O, O)) == std::pair{0, 2});  // 2a, three all-out
        CHECK(decide(inner(IO, O, I, I)) == std::pair{3, 1});  // 2b: origin d, destination b
        CHECK(decide(inner(IO, OI, I, I)) == std::pair{2, 0}); // 3a
        CHECK(decide(inner(IO, O, OI, I)) == std::pair{3, 1}); // 3b: origin d, destination b
        CHECK(orient_expanded_kite(inner(O, O, O, I)).which == ExpansionCase::Case1a);
        CHECK(orient_expanded_kite(inner(I, I, I, O)).which == ExpansionCase::Case1b);
        CHECK(orient_expanded_kite(inner(O, O, I, I)).which == ExpansionCase::Case1c);
        CHECK(orient_expanded_kite(inner(IO, I, I, I)).which == ExpansionCase::Case2a);
        CHECK(orient_expanded_kite(inner(IO, O, I, I)).which == ExpansionCase::Case2b);
        CHECK(orient_expanded_kite(inner(IO, OI, I, I)).which == ExpansionCase::Case3a);
        CHECK(orient_expanded_kite(inner(IO, O, OI, I)).which == ExpansionCase::Case3b);
    }

    TEST_CASE("global source with an outgoing edge at a") {
        ExpansionPattern p = inner(O, {}, {}, {});
        p.role = ExpansionPattern::Role::Source;
        const auto d = orient_expanded_kite(p);
        CHECK(d.origin == 2);
        CHECK(d.destination == 0);
        CHECK(d.which == ExpansionCase::SourceSink);
        p.role = ExpansionPattern::Role::Sink;
        p.corners = {I, {}, {}, {}};
        CHECK(decide(p) == std::pair{0, 2});
    }

    TEST_CASE("case table is total and sound on every bipolar pattern") {
        int patterns = 0;
        for_each_inner_arrangement([&](const Sides& s) {
            const ExpansionPattern p = pattern_of(s);
            ExpansionDecision d;
            REQUIRE_NOTHROW(d = orient_expanded_kite(p));
            CHECK(decision_is_sound(s, d.origin, d.destination, false, false));
            ++patterns;
        });
        CHECK(patterns > 1000);
    }

    TEST_CASE("rotating the input rotates the decision") {
        for_each_inner_arrangement([&](const Sides& s) {
            const ExpansionPattern p = pattern_of(s);
            const auto base = orient_expanded_kite(p);
            for (int r = 1; r < 4; ++r) {
                ExpansionPattern q;
                for (int j = 0; j < 4; ++j) q.corners[j] = p.corners[(j + r) % 4];
                const auto d = orient_expanded_kite(q);
                CHECK(d.origin == (base.origin - r + 4) % 4);
                CHECK(d.destination == (base.destination - r + 4) % 4);
                CHECK(d.which == base.which);
            }
        });
    }

    TEST_CASE("reflection keeps the case") {
        for_each_inner_arrangement([&](const Sides& s) {
            // Mirror: corner order a, d, c, b and each rotation reversed.
            Sides m;
            for (int j = 0; j < 4; ++j) m[j] = std::vector<bool>(s[(4 - j) % 4].rbegin(), s[(4 - j) % 4].rend());
            const auto d1 = orient_expanded_kite(pattern_of(s));
            const auto d2 = orient_expanded_kite(pattern_of(m));
            CHECK(d1.which == d2.which);
            CHECK(decision_is_sound(m, d2.origin, d2.destination, false, false));
        });
    }

    TEST_CASE("pole kites are sound") {
        for (int code = 0; code < 81; ++code) {
            Sides s;
            for (int i = 0, c = code; i < 4; ++i, c /= 3) s[i].assign(1 + c % 3, true);
            for (int outer_mask = 1; outer_mask < 16; ++outer_mask) {
                ExpansionPattern p = pattern_of(s);
                p.role = ExpansionPattern::Role::Source;
                for (int i = 0; i < 4; ++i) p.on_outer_face[i] = (outer_mask >> i) & 1;
                const auto d = orient_expanded_kite(p);
                CHECK(decision_is_sound(s, d.origin, d.destination, true, false));
                if (p.on_outer_face[0] || p.on_outer_face[1] || p.on_outer_face[2] || p.on_outer_face[3])
                    CHECK(p.on_outer_face[d.origin]);
            }
        }
    }

    TEST_CASE("non-bipolar pattern is unmatched") {
        CHECK_THROWS_AS(orient_expanded_kite(inner(IO, I, IO, I)), Error);
    }

    TEST_CASE("st-orientation of a single edge and a triangle") {
        const ICPlaneGraph edge = read_ic_graph(R"({"vertices": ["u", "v"], "edges": [["u", "v"]],
            "rotations": {"u": [0], "v": [0]}, "outer_face_edge": 0})");
        const StOrientation o1 = st_orient(edge.base.map(), edge.base.outer_dart());
        CHECK(edge.base.name(o1.s) == "u");
        CHECK(o1.tail[0] == o1.s);

        const ICPlaneGraph tri = read_ic_graph(fixtures::kTriangle);
        const StOrientation o = st_orient(tri.base.map(), tri.base.outer_dart());
        CHECK(tri.base.name(o.s) == "1");
        CHECK(tri.base.name(o.t) == "2");
        CHECK(o.number == std::vector<int>{0, 2, 1});
        CHECK(check_st_graph(tri.base, o.tail, o.number).ok());
    }

    TEST_CASE("st-orientation rejects a cut vertex") {
        const ICPlaneGraph path = read_ic_graph(fixtures::kPath);
        CHECK_THROWS_AS(st_orient(path.base.map(), path.base.outer_dart()), Error);
    }

    TEST_CASE("kite sharing an edge with a triangle gives parallel edges") {
        const ICPlaneGraph g = read_ic_graph(R"({
          "vertices": ["a", "b", "c", "d", "x", "v"],
          "edges": [["x", "a"], ["x", "b"], ["x", "c"], ["x", "d"], ["v", "a"], ["v", "b"]],
          "rotations": {"x": [0, 1, 2, 3], "a": [0, 4], "b": [5, 1], "c": [2], "d": [3], "v": [5, 4]},
          "dummies": ["x"], "outer_face_edge": 4})");
        const KiteAugmentation ka = make_empty_kites(g);
        const SplitResult split = split_crossings(ka.graph, ka.kites);
        const Contraction c = contract_kite_faces(split.plane, ka.kites);
        int v = -1;
        for (int i = 0; i < split.plane.vertex_capacity(); ++i)
            if (split.plane.map().vertex_alive(i) && split.plane.name(i) == "v") v = i;
        REQUIRE(v >= 0);
        int parallel = 0;
        for (int d : c.map.darts_around(c.node_of[v])) parallel += c.map.head(d) == c.kite_node[0];
        CHECK(parallel == 2);
        CHECK(c.map.degree(c.kite_node[0]) == 2);
        const PipelineResult r = run_pipeline(g, false);
        CHECK(check_st_graph(r.oriented.plus.graph, r.oriented.plus.orientation.tail).ok());
    }

    TEST_CASE("crossing-free expansion is the identity") {
        const ICPlaneGraph g = read_ic_graph(fixtures::kK4);
        const PipelineResult r = run_pipeline(g, false);
        const auto& pc = r.oriented.contracted;
        for (int ce = 0; ce < pc.map.edge_capacity(); ++ce) {
            const int e = pc.source_edge[ce];
            CHECK(r.oriented.split.plane.name(r.oriented.plane_orientation.tail[e]) ==
                  r.oriented.split.plane.name(pc.vertex_of_node[r.oriented.contracted_orientation.tail[ce]]));
        }
        CHECK(r.oriented.kites.empty());
    }

    TEST_CASE("chain of ten kites") {
        Json j;
        j["vertices"] = Json::array();
        j["edges"] = Json::array();
        j["rotations"] = Json::object();
        j["dummies"] = Json::array();
        for (int i = 0; i < 10; ++i) {
            const std::string k = std::to_string(i);
            for (const char* p : {"a", "b", "c", "d", "x"}) j["vertices"].push_back(p + k);
            j["dummies"].push_back("x" + k);
            Json xr = Json::array();
            for (const char* p : {"a", "b", "c", "d"}) {
                xr.push_back(j["edges"].size());
                j["rotations"][p + k] = Json::array({j["edges"].size()});
                j["edges"].push_back({"x" + k, p + k});
            }
            j["rotations"]["x" + k] = xr;
        }
        for (int i = 0; i + 1 < 10; ++i) {
            const std::string c = "c" + std::to_string(i), a = "a" + std::to_string(i + 1);
            j["rotations"][c].push_back(j["edges"].size());
            j["rotations"][a].push_back(j["edges"].size());
            j["edges"].push_back({c, a});
        }
        j["outer_face_edge"] = 0;
        const ICPlaneGraph g = read_ic_graph(to_text(j));
        const PipelineResult r = run_pipeline(g, false);
        CHECK(r.oriented.kites.size() == 10);
        CHECK(check_st_graph(r.oriented.split.plane, r.oriented.plane_orientation.tail).ok());
        CHECK(check_st_graph(r.oriented.plus.graph, r.oriented.plus.orientation.tail).ok());
        CHECK(r.oriented.stats.invariant_checks == 10);
    }

    TEST_CASE("every intermediate of generated instances is an st-graph") {
        for (std::uint64_t seed = 1; seed <= 80; ++seed) {
            InstanceSpec spec;
            spec.n = 4 + static_cast<int>(seed * 17 % 120);
            spec.seed = seed;
            spec.edge_keep = seed % 2 ? 1.0 : 0.3;
            const PipelineResult r = run_pipeline(generate(spec).graph, false);
            const OrientResult& o = r.oriented;
            CAPTURE(seed);
            std::vector<std::string> names(o.contracted.map.vertex_capacity(), "n");
            const EmbeddedGraph pcn(names, std::vector<char>(names.size(), 0), o.contracted.map, o.contracted.outer_dart);
            CHECK(check_st_graph(pcn, o.contracted_orientation.tail, o.contracted_orientation.number).ok());
            CHECK(check_st_graph(o.split.plane, o.plane_orientation.tail, o.plane_orientation.number).ok());
            CHECK(check_st_graph(o.plus.graph, o.plus.orientation.tail, o.plus.orientation.number).ok());
            // Each kite face: two directed paths of length two.
            for (const auto& k : o.kites) {
                const int oi = k.corner_index(k.origin), zi = k.corner_index(k.destination);
                CHECK((oi + 2) % 4 == zi);
                for (int i = 0; i < 4; ++i) {
                    const int tail = o.plane_orientation.tail[k.sides[i]];
                    const int p = k.corners[i], q = k.corners[(i + 1) % 4];
                    CHECK(tail == ((p == k.origin || q == k.destination) ? p : q));
                }
                CHECK(k.left != k.right);
                CHECK(k.corner_index(k.left) % 2 != oi % 2);
            }
        }
    }
}
