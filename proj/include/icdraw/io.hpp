#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "icdraw/drawing.hpp"
#include "icdraw/graph.hpp"

namespace icdraw {

using Json = nlohmann::json;

/// Parses text into JSON; SchemaError carries the line and column.
Json parse_json_text(std::string_view text);

/// Graph format:
///   { "vertices": [id...], "rotations": {id: [edge...]}, "edges": [[id,id]...],
///     "dummies": [id...], "outer_face_edge": edge, "augmented": [edge...] }
/// Rotations are clockwise. "augmented" is optional.
EmbeddedGraph graph_from_json(const Json& j, std::vector<char>* augmented = nullptr);

/// Dead slots are compacted away. `augmented` is indexed by edge slot.
Json graph_to_json(const EmbeddedGraph& g, const std::vector<char>* augmented = nullptr);

/// Parses and validates in one step.
ICPlaneGraph read_ic_graph(std::string_view text);

/// Canonical text form: two-space indent, trailing newline.
std::string to_text(const Json& j);

/// `scale` divides every coordinate; 4 gives visibility-grid units.
Json to_json(const LVisibilityDrawing& d, int scale = 1);
Json to_json(const RacDrawing& d, int scale = 1);

LVisibilityDrawing l_visibility_from_json(const Json& j);
RacDrawing rac_from_json(const Json& j);

}  // namespace icdraw
