#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "icdraw/io.hpp"

namespace fixtures {

// Corners a, b, c, d clockwise around the dummy x; no side edges.
inline const char* kKiteBare = R"({
  "vertices": ["a", "b", "c", "d", "x"],
  "edges": [["x", "a"], ["x", "b"], ["x", "c"], ["x", "d"]],
  "rotations": {"x": [0, 1, 2, 3], "a": [0], "b": [1], "c": [2], "d": [3]},
  "dummies": ["x"],
  "outer_face_edge": 0
})";

// The same crossing with all four sides: K4 drawn as a kite.
inline const char* kKite = R"({
  "vertices": ["a", "b", "c", "d", "x"],
  "edges": [["x", "a"], ["x", "b"], ["x", "c"], ["x", "d"],
            ["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
  "rotations": {"x": [0, 1, 2, 3], "a": [4, 0, 7], "b": [5, 1, 4], "c": [6, 2, 5], "d": [7, 3, 6]},
  "dummies": ["x"],
  "outer_face_edge": 4
})";

inline const char* kTriangle = R"({
  "vertices": ["1", "2", "3"],
  "edges": [["1", "2"], ["2", "3"], ["3", "1"]],
  "rotations": {"1": [0, 2], "2": [1, 0], "3": [2, 1]},
  "outer_face_edge": 0
})";

// Plane K4: triangle 1,2,3 with 4 in the middle.
inline const char* kK4 = R"({
  "vertices": ["1", "2", "3", "4"],
  "edges": [["1", "2"], ["2", "3"], ["3", "1"], ["4", "1"], ["4", "2"], ["4", "3"]],
  "rotations": {"1": [0, 3, 2], "2": [1, 4, 0], "3": [2, 5, 1], "4": [3, 4, 5]},
  "outer_face_edge": 0
})";

inline const char* kPath = R"({
  "vertices": ["a", "b", "c"],
  "edges": [["a", "b"], ["b", "c"]],
  "rotations": {"a": [0], "b": [0, 1], "c": [1]},
  "outer_face_edge": 0
})";

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(ICDRAW_FIXTURES) + "/" + name; }

}  // namespace fixtures
