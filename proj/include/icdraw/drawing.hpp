#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "icdraw/augment.hpp"
#include "icdraw/orient.hpp"
#include "icdraw/visibility.hpp"

namespace icdraw {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// Horizontal part runs from corner by h_extent, vertical part by v_extent.
/// Either extent may be zero.
struct LShape {
    Point corner;
    std::int64_t h_extent = 0;
    std::int64_t v_extent = 0;

    Point h_end() const { return {corner.x + h_extent, corner.y}; }
    Point v_end() const { return {corner.x, corner.y + v_extent}; }
};

struct Visibility {
    int u = -1;
    int v = -1;
    bool augmented = false;
    Point a;  // on the shape of u
    Point b;  // on the shape of v
    bool horizontal() const { return a.y == b.y; }
};

/// All coordinates in final integer units (one unit = a quarter of a
/// visibility-grid cell). Edge i is real edge i of the drawn graph.
struct LVisibilityDrawing {
    std::vector<std::string> vertices;
    std::vector<LShape> shapes;
    std::vector<Visibility> visibilities;
    std::vector<std::array<int, 2>> crossings;
};

struct Polyline {
    int u = -1;
    int v = -1;
    bool augmented = false;
    std::vector<Point> points;  // starts at u's point, ends at v's point
};

struct RacDrawing {
    std::vector<std::string> vertices;
    std::vector<Point> points;
    std::vector<Polyline> edges;
    std::vector<std::array<int, 2>> crossings;
};

/// Turns the bars of each kite's left and right vertex into L-shapes whose
/// tips meet the horizontal visibility of the second crossing edge.
/// `graph` is the augmented graph whose real edges are drawn.
LVisibilityDrawing to_l_visibility(const VisibilityDrawing& bars, const PlusGraph& plus,
                                   std::span<const KiteRecord> kites, const ICPlaneGraph& graph);

/// Plain bar drawing of the same graph (crossing edges as in the L drawing).
LVisibilityDrawing bars_only(const VisibilityDrawing& bars, const PlusGraph& plus, const ICPlaneGraph& graph);

Point representative_point(const LShape& shape);

RacDrawing to_rac(const LVisibilityDrawing& gamma);

/// Removes repeated points and bends whose neighbours are collinear with them.
std::vector<Point> simplify_polyline(std::vector<Point> pts);

}  // namespace icdraw
