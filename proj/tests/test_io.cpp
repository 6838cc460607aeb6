#include "doctest.h"

#include "icdraw/generator.hpp"
#include "icdraw/pipeline.hpp"
#include "icdraw/svg.hpp"
#include "icdraw/verify.hpp"
#include "support.hpp"

using namespace icdraw;

namespace {

int count(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("kite fixture parses with one crossing") {
        const ICPlaneGraph g = read_ic_graph(fixtures::kKite);
        CHECK(g.num_crossings() == 1);
        CHECK(g.real_edges.size() == 6);
    }

    TEST_CASE("graph text round trip is byte exact") {
        InstanceSpec spec;
        spec.n = 60;
        spec.seed = 9;
        const std::string text = to_text(graph_to_json(generate(spec).graph.base));
        const std::string again = to_text(graph_to_json(read_ic_graph(text).base));
        CHECK(text == again);
        CHECK(text.back() == '\n');
    }

    TEST_CASE("drawing JSON round trip") {
        const PipelineResult r = run_pipeline(read_ic_graph(fixtures::kKite), true);
        const std::string lv = to_text(to_json(r.l_visibility));
        CHECK(to_text(to_json(l_visibility_from_json(parse_json_text(lv)))) == lv);
        const std::string rac = to_text(to_json(r.rac));
        CHECK(to_text(to_json(rac_from_json(parse_json_text(rac)))) == rac);
        CHECK(check_rac(rac_from_json(parse_json_text(rac))).ok());
    }

    TEST_CASE("malformed input reports its position") {
        try {
            parse_json_text("{\n  \"vertices\": [\n  ,]\n}");
            FAIL("no exception");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SchemaError);
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }

    TEST_CASE("schema errors") {
        CHECK_THROWS_AS(read_ic_graph(R"({"vertices": ["a"]})"), Error);
        CHECK_THROWS_AS(read_ic_graph(R"({"vertices": ["a", "b"], "edges": [["a", "q"]],
            "rotations": {"a": [0], "b": [0]}, "outer_face_edge": 0})"), Error);
    }

    TEST_CASE("generator is deterministic") {
        InstanceSpec spec;
        spec.n = 200;
        spec.seed = 42;
        spec.crossing_fraction = 0.2;
        const auto a = generate(spec);
        const auto b = generate(spec);
        CHECK(to_text(graph_to_json(a.graph.base)) == to_text(graph_to_json(b.graph.base)));
        CHECK(a.achieved_crossings == a.graph.num_crossings());
        CHECK(a.achieved_crossings <= a.target_crossings);
        spec.seed = 43;
        CHECK(to_text(graph_to_json(generate(spec).graph.base)) != to_text(graph_to_json(a.graph.base)));
        spec.n = 2;
        CHECK_THROWS_AS(generate(spec), Error);
    }

    TEST_CASE("svg of the kite") {
        const PipelineResult r = run_pipeline(read_ic_graph(fixtures::kKite), true);
        const std::string svg = emit_svg(r.l_visibility);
        CHECK(count(svg, "class=\"vertex\"") == 4);
        CHECK(count(svg, "class=\"edge") == 6);
        CHECK(count(svg, "class=\"crossing\"") == 1);
        CHECK(svg.find("</svg>") != std::string::npos);
        const std::string rac = emit_svg(r.rac);
        CHECK(count(rac, "class=\"vertex\"") == 4);
        CHECK(count(rac, "class=\"crossing\"") == 1);
    }

    TEST_CASE("intermediates carry orientations") {
        const PipelineResult r = run_pipeline(read_ic_graph(fixtures::kKite), false);
        const Json j = intermediates_json(r);
        for (const char* k : {"augmented", "P", "P_C", "P_plus"}) CHECK(j.contains(k));
        CHECK(j["P_plus"].contains("tails"));
    }
}
