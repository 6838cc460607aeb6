#pragma once

#include <span>
#include <vector>

#include "icdraw/augment.hpp"
#include "icdraw/orient.hpp"

namespace icdraw {

struct Bar {
    int y = 0;
    int x_left = 0;
    int x_right = 0;
};

struct Segment {
    int x = 0;
    int y_low = 0;
    int y_high = 0;
};

/// Bar-visibility drawing of a plane st-graph. Columns are pre-scaled by 2.
/// Vectors are indexed by vertex / edge slots of the graph drawn.
struct VisibilityDrawing {
    std::vector<char> has_bar;
    std::vector<Bar> bars;
    std::vector<char> has_segment;
    std::vector<Segment> segments;
    int grid_width = 0;
    int grid_height = 0;
};

/// Left-to-right numbering of the dual. The outer face is split into a
/// left part s* (face id = outer face) and a right part t* (id = faces).
struct DualNumbering {
    std::vector<int> face_of;  // per dart
    int faces = 0;             // real face count; t* has id == faces
    int outer = -1;
    std::vector<int> number;   // per dual node (faces + 1 entries)
    std::vector<int> left;     // per edge: left dual node
    std::vector<int> right;    // per edge: right dual node
};

DualNumbering dual_number(const PlanarMap& map, const StOrientation& orientation, int outer_dart);

/// y from longest-path numbering, edge columns from the dual numbering,
/// bars spanning their incident columns. Checks kite clearance.
VisibilityDrawing build_visibility(const PlusGraph& plus, std::span<const KiteRecord> kites);

}  // namespace icdraw
