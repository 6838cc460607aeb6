#pragma once

#include <string>

#include "icdraw/drawing.hpp"

namespace icdraw {

struct SvgStyle {
    double unit = 4.0;    // pixels per drawing unit
    double margin = 16.0;
    std::string vertex_color = "#1f4e79";
    std::string edge_color = "#333333";
    std::string augmented_color = "#999999";
    std::string crossing_color = "#c0392b";
    bool show_augmented = true;
};

std::string emit_svg(const LVisibilityDrawing& d, const SvgStyle& style = {});
std::string emit_svg(const RacDrawing& d, const SvgStyle& style = {});

}  // namespace icdraw
