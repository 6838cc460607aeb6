#include "doctest.h"

#include "icdraw/generator.hpp"
#include "icdraw/pipeline.hpp"
#include "icdraw/verify.hpp"
#include "support.hpp"

using namespace icdraw;

TEST_SUITE("drawing") {
    TEST_CASE("representative points") {
        CHECK(representative_point({{8, 4}, 6, 3}) == Point{8, 4});
        CHECK(representative_point({{0, 0}, 4, 0}) == Point{2, 0});
        CHECK(representative_point({{5, 0}, 0, 6}) == Point{5, 3});
        CHECK(representative_point({{7, 7}, 0, 0}) == Point{7, 7});
    }

    TEST_CASE("simplify drops collinear bends only") {
        CHECK(simplify_polyline({{0, 0}, {0, 1}, {0, 5}, {3, 5}}) == std::vector<Point>{{0, 0}, {0, 5}, {3, 5}});
        CHECK(simplify_polyline({{0, 0}, {0, 0}, {2, 2}}) == std::vector<Point>{{0, 0}, {2, 2}});
        CHECK(simplify_polyline({{0, 0}, {1, 1}, {2, 0}}).size() == 3);
    }

    TEST_CASE("two-bend edge from an L corner to a bar") {
        LVisibilityDrawing g;
        g.vertices = {"u", "v"};
        g.shapes = {{{8, 4}, 8, 2}, {{10, 20}, 12, 0}};
        g.visibilities = {{0, 1, false, {12, 4}, {12, 20}}};
        const RacDrawing r = to_rac(g);
        REQUIRE(r.edges.size() == 1);
        CHECK(r.edges[0].points == std::vector<Point>{{8, 4}, {12, 5}, {12, 19}, {16, 20}});
        CHECK(check_rac(r).ok());
    }

    TEST_CASE("straight edge when points line up") {
        LVisibilityDrawing g;
        g.vertices = {"u", "v"};
        g.shapes = {{{0, 0}, 4, 0}, {{0, 8}, 4, 0}};
        g.visibilities = {{0, 1, false, {2, 0}, {2, 8}}};
        const RacDrawing r = to_rac(g);
        CHECK(r.edges[0].points == std::vector<Point>{{2, 0}, {2, 8}});
    }

    TEST_CASE("kite stubs meet the horizontal visibility") {
        const PipelineResult r = run_pipeline(read_ic_graph(fixtures::kKite), true);
        const LVisibilityDrawing& g = r.l_visibility;
        REQUIRE(g.crossings.size() == 1);
        int horizontal = 0;
        for (const auto& vis : g.visibilities) {
            if (!vis.horizontal() || vis.a == vis.b) continue;
            ++horizontal;
            const LShape& su = g.shapes[vis.u];
            const LShape& sv = g.shapes[vis.v];
            CHECK(su.v_extent != 0);
            CHECK(sv.v_extent != 0);
            if (su.corner.y == sv.corner.y) {
                CHECK(su.v_extent == 2);
                CHECK(sv.v_extent == 2);
            } else {
                CHECK(su.v_extent == -sv.v_extent);
            }
            CHECK(vis.a == su.v_end());
            CHECK(vis.b == sv.v_end());
        }
        CHECK(horizontal == 1);
        CHECK(check_l_visibility(g, &r.kites.graph).ok());
        CHECK(check_rac(r.rac, &r.kites.graph).ok());
    }

    TEST_CASE("rows two apart give stubs of four") {
        LVisibilityDrawing g;
        g.vertices = {"d", "b"};
        // Bars on rows 4 and 12 (grid rows 1 and 3), tips meet at 8.
        g.shapes = {{{5, 4}, -5, 4}, {{11, 12}, 5, -4}};
        g.visibilities = {{0, 1, false, {5, 8}, {11, 8}}};
        CHECK(check_l_visibility(g).ok());
        CHECK(g.shapes[0].v_extent == 4);
        CHECK(g.shapes[1].v_extent == -4);
    }

    TEST_CASE("crossing-free input yields plain bars") {
        const PipelineResult r = run_pipeline(read_ic_graph(fixtures::kK4), true);
        for (const auto& s : r.l_visibility.shapes) CHECK(s.v_extent == 0);
        for (const auto& vis : r.l_visibility.visibilities) CHECK_FALSE(vis.horizontal());
        CHECK(check_l_visibility(r.l_visibility, &r.kites.graph).ok());
    }

    TEST_CASE("generated drawings verify") {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            InstanceSpec spec;
            spec.n = 20 + static_cast<int>(seed * 7 % 150);
            spec.seed = seed;
            spec.edge_keep = seed % 3 ? 1.0 : 0.5;
            const auto inst = generate(spec);
            const PipelineResult r = run_pipeline(inst.graph, true);
            CAPTURE(seed);
            CHECK(check_l_visibility(r.l_visibility, &inst.graph).violations.size() == 0);
            CHECK(check_rac(r.rac, &inst.graph).violations.size() == 0);
            CHECK(measure(r.rac).max_bends <= 2);
            const LVisibilityDrawing bars = bars_only(r.bars, r.oriented.plus, r.biconnected.graph);
            for (const auto& s : bars.shapes) CHECK(s.v_extent == 0);
        }
    }
}
