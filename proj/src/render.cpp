#include "vennk/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace vennk {

namespace {

const char* const kPalette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                                "#42d4f4", "#f032e6", "#9a6324", "#808000", "#000075"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Viewport {
  double min_x, max_y, scale, margin;

  std::string map(const Point& p) const {
    return fixed(margin + (to_double(p.x) - min_x) * scale) + "," + fixed(margin + (max_y - to_double(p.y)) * scale);
  }
};

std::string ring(const Viewport& vp, const std::vector<Point>& pts) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) d += (i == 0 ? "M" : " L") + vp.map(pts[i]);
  return d + " Z";
}

}  // namespace

std::string render_svg(const PolygonFamily& family, const RenderOptions& options) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const auto& p : family.polygons()) {
    for (const auto& c : p.corners()) {
      const double x = to_double(c.x);
      const double y = to_double(c.y);
      if (first) {
        min_x = max_x = x;
        min_y = max_y = y;
        first = false;
      }
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  const double margin = options.size * 0.05;
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const Viewport vp{min_x, max_y, (options.size - 2 * margin) / extent, margin};
  const std::size_t n = family.size();

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.size << "\" height=\""
      << options.size << "\" viewBox=\"0 0 " << options.size << ' ' << options.size << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << options.size << "\" height=\"" << options.size
      << "\" fill=\"#ffffff\"/>\n";

  // Built even when unshaded so degenerate families are refused as in verify.
  const Arrangement arr = Arrangement::build(family);
  if (options.shade_faces) {
    const std::string canvas = "M0,0 L" + std::to_string(options.size) + ",0 L" + std::to_string(options.size) +
                               "," + std::to_string(options.size) + " L0," + std::to_string(options.size) + " Z";
    out << "<g id=\"faces\" fill-rule=\"evenodd\" stroke=\"none\">\n";
    for (const auto& f : arr.faces()) {
      std::string d = f.outer_cycle == kNone ? canvas : ring(vp, arr.cycle_polyline(f.outer_cycle));
      for (HalfEdgeId h : f.holes) d += " " + ring(vp, arr.cycle_polyline(h));
      const int level = 255 - static_cast<int>(200.0 * f.sign.weight() / static_cast<double>(n));
      char fill[8];
      std::snprintf(fill, sizeof fill, "#%02x%02x%02x", level, level, level);
      out << "<path class=\"face\" data-sign=\"" << f.sign.str() << "\" fill=\"" << fill << "\" d=\"" << d
          << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g id=\"curves\" fill=\"none\" stroke-width=\"2\" stroke-linejoin=\"round\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = family[i];
    out << "<path class=\"curve\" data-label=\"" << escape(p.label()) << "\" stroke=\"" << kPalette[i % 10]
        << "\" d=\"" << ring(vp, p.corners()) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace vennk
