#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "icdraw/drawing.hpp"
#include "icdraw/graph.hpp"

namespace icdraw {

struct Violation {
    std::string kind;
    std::string detail;
};

/// Collects every violation found; never throws.
struct Report {
    std::vector<Violation> violations;
    std::map<std::string, std::int64_t> stats;

    bool ok() const { return violations.empty(); }
    void add(std::string kind, std::string detail) { violations.push_back({std::move(kind), std::move(detail)}); }
    nlohmann::json to_json() const;
};

/// Acyclicity, one source and one sink on the outer face, consecutive
/// in/out edges around every vertex, agreeing parallel edges. When
/// `number` is non-empty it must increase along every edge.
Report check_st_graph(const EmbeddedGraph& g, std::span<const int> tail, std::span<const int> number = {});

/// Geometric audit of an L-visibility drawing. With `graph`, edges and
/// crossing pairs are also compared against its real edges.
Report check_l_visibility(const LVisibilityDrawing& d, const ICPlaneGraph* graph = nullptr);

Report check_rac(const RacDrawing& d, const ICPlaneGraph* graph = nullptr);

struct Metrics {
    std::int64_t width = 0;
    std::int64_t height = 0;
    int crossings = 0;
    int max_bends = 0;
    std::int64_t total_bends = 0;
};

Metrics measure(const LVisibilityDrawing& d);
Metrics measure(const RacDrawing& d);

}  // namespace icdraw
