#pragma once

#include "icdraw/augment.hpp"
#include "icdraw/drawing.hpp"
#include "icdraw/io.hpp"
#include "icdraw/orient.hpp"
#include "icdraw/visibility.hpp"

namespace icdraw {

struct PipelineResult {
    KiteAugmentation kites;
    BiconnectResult biconnected;
    OrientResult oriented;
    VisibilityDrawing bars;
    LVisibilityDrawing l_visibility;
    RacDrawing rac;
};

/// Empty kites, biconnectivity, bipolar orientation, bar drawing, L-shapes
/// and (optionally) the two-bend RAC drawing.
PipelineResult run_pipeline(const ICPlaneGraph& input, bool with_rac = true);

/// Intermediate graphs (augmented graph, P, contracted P, P+) in the graph
/// format, each with its orientation as a list of tail vertices.
Json intermediates_json(const PipelineResult& r);

}  // namespace icdraw
