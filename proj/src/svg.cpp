#include "icdraw/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

namespace icdraw {

namespace {

struct Canvas {
    std::int64_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    const SvgStyle* style = nullptr;

    void fit(const std::vector<Point>& pts) {
        if (pts.empty()) return;
        x0 = x1 = pts[0].x;
        y0 = y1 = pts[0].y;
        for (const auto& p : pts) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    }
    // SVG y grows downwards.
    std::string at(double x, double y) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f,%.2f", style->margin + (x - x0) * style->unit,
                      style->margin + (y1 - y) * style->unit);
        return buf;
    }
    std::string at(const Point& p) const { return at(static_cast<double>(p.x), static_cast<double>(p.y)); }
    double width() const { return 2 * style->margin + (x1 - x0) * style->unit; }
    double height() const { return 2 * style->margin + (y1 - y0) * style->unit; }
};

std::string header(const Canvas& c, const SvgStyle& s) {
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << c.width() << "\" height=\""
      << c.height() << "\" viewBox=\"0 0 " << c.width() << " " << c.height() << "\">\n"
      << "<style>\n"
      << "  .vertex { stroke: " << s.vertex_color << "; stroke-width: 3; fill: " << s.vertex_color << "; }\n"
      << "  .edge { stroke: " << s.edge_color << "; stroke-width: 1; fill: none; }\n"
      << "  .augmented { stroke: " << s.augmented_color << "; stroke-dasharray: 4 3; }\n"
      << "  .crossing { fill: none; stroke: " << s.crossing_color << "; stroke-width: 1; }\n"
      << "</style>\n";
    return o.str();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::optional<std::pair<double, double>> intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
    const double den = rx * sy - ry * sx;
    if (den == 0) return std::nullopt;
    const double t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / den;
    const double u = ((c.x - a.x) * ry - (c.y - a.y) * rx) / den;
    if (t <= 0 || t >= 1 || u <= 0 || u >= 1) return std::nullopt;
    return std::make_pair(a.x + t * rx, a.y + t * ry);
}

}  // namespace

std::string emit_svg(const LVisibilityDrawing& d, const SvgStyle& style) {
    Canvas c;
    c.style = &style;
    std::vector<Point> pts;
    for (const auto& s : d.shapes) pts.insert(pts.end(), {s.corner, s.h_end(), s.v_end()});
    for (const auto& v : d.visibilities) pts.insert(pts.end(), {v.a, v.b});
    c.fit(pts);
    std::ostringstream o;
    o << header(c, style);
    o << "<g id=\"edges\">\n";
    for (std::size_t i = 0; i < d.visibilities.size(); ++i) {
        const auto& v = d.visibilities[i];
        if (v.augmented && !style.show_augmented) continue;
        o << "  <path class=\"edge" << (v.augmented ? " augmented" : "") << "\" data-edge=\"" << i << "\" d=\"M "
          << c.at(v.a) << " L " << c.at(v.b) << "\"/>\n";
    }
    o << "</g>\n<g id=\"vertices\">\n";
    for (std::size_t i = 0; i < d.shapes.size(); ++i) {
        const auto& s = d.shapes[i];
        o << "  <path class=\"vertex\" data-vertex=\"" << escape(d.vertices[i]) << "\" d=\"M " << c.at(s.h_end())
          << " L " << c.at(s.corner) << " L " << c.at(s.v_end()) << "\"/>\n";
    }
    o << "</g>\n<g id=\"crossings\">\n";
    for (const auto& cr : d.crossings) {
        const auto& a = d.visibilities[cr[0]];
        const auto& b = d.visibilities[cr[1]];
        if (const auto p = intersect(a.a, a.b, b.a, b.b)) {
            const std::string s = c.at(p->first, p->second);
            const auto comma = s.find(',');
            o << "  <circle class=\"crossing\" cx=\"" << s.substr(0, comma) << "\" cy=\"" << s.substr(comma + 1)
              << "\" r=\"4\"/>\n";
        }
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

std::string emit_svg(const RacDrawing& d, const SvgStyle& style) {
    Canvas c;
    c.style = &style;
    std::vector<Point> pts = d.points;
    for (const auto& e : d.edges) pts.insert(pts.end(), e.points.begin(), e.points.end());
    c.fit(pts);
    std::ostringstream o;
    o << header(c, style);
    o << "<g id=\"edges\">\n";
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        const auto& e = d.edges[i];
        if (e.augmented && !style.show_augmented) continue;
        o << "  <path class=\"edge" << (e.augmented ? " augmented" : "") << "\" data-edge=\"" << i << "\" d=\"M";
        for (std::size_t k = 0; k < e.points.size(); ++k) o << (k ? " L " : " ") << c.at(e.points[k]);
        o << "\"/>\n";
    }
    o << "</g>\n<g id=\"vertices\">\n";
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        const std::string p = c.at(d.points[i]);
        const auto comma = p.find(',');
        o << "  <circle class=\"vertex\" data-vertex=\"" << escape(d.vertices[i]) << "\" cx=\"" << p.substr(0, comma)
          << "\" cy=\"" << p.substr(comma + 1) << "\" r=\"2\"/>\n";
    }
    o << "</g>\n<g id=\"crossings\">\n";
    for (const auto& cr : d.crossings) {
        const auto& a = d.edges[cr[0]].points;
        const auto& b = d.edges[cr[1]].points;
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
            for (std::size_t j = 0; j + 1 < b.size(); ++j)
                if (const auto p = intersect(a[i], a[i + 1], b[j], b[j + 1])) {
                    const std::string s = c.at(p->first, p->second);
                    const auto comma = s.find(',');
                    o << "  <circle class=\"crossing\" cx=\"" << s.substr(0, comma) << "\" cy=\"" << s.substr(comma + 1)
                      << "\" r=\"4\"/>\n";
                }
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

}  // namespace icdraw
