#pragma once

#include <cstdint>

#include "icdraw/graph.hpp"

namespace icdraw {

struct InstanceSpec {
    int n = 10;
    double crossing_fraction = 0.25;
    std::uint64_t seed = 1;
    /// Probability of keeping each uncrossed edge that is not needed for
    /// connectivity. Values below 1 leave work for the augmentation steps.
    double edge_keep = 1.0;
};

struct GeneratedInstance {
    ICPlaneGraph graph;
    int target_crossings = 0;
    int achieved_crossings = 0;
};

/// Random plane triangulation (random face splits followed by random
/// flips) in which vertex-disjoint quadrilaterals are turned into
/// crossings. Deterministic in the seed.
GeneratedInstance generate(const InstanceSpec& spec);

}  // namespace icdraw
