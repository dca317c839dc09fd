#pragma once

// Fixture loading and independent oracles shared by the test binaries.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vennk/arrangement.hpp"
#include "vennk/document.hpp"

namespace vennk::testing {

inline std::string data_path(const std::string& name) { return std::string(VENNK_DATA_DIR) + "/" + name; }

inline PolygonFamily fixture(const std::string& name) { return load_family_file(data_path(name + ".family")).family(); }

inline Point pt(const char* x, const char* y) { return {parse_rat(x), parse_rat(y)}; }
template <std::integral T>
Point pt(T x, T y) {
  return {Rat(static_cast<long>(x)), Rat(static_cast<long>(y))};
}

inline ConvexPolygon square(long x0, long y0, long side, std::string label = {}) {
  return ConvexPolygon({pt(x0, y0), pt(x0 + side, y0), pt(x0 + side, y0 + side), pt(x0, y0 + side)},
                       std::move(label));
}

inline ConvexPolygon triangle(long ax, long ay, long bx, long by, long cx, long cy) {
  return ConvexPolygon({pt(ax, ay), pt(bx, by), pt(cx, cy)});
}

// Strict convex hull of integer points (monotone chain), counter-clockwise.
inline std::vector<Point> hull(std::vector<std::pair<long, long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return {};
  auto turn = [](std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> h(2 * pts.size());
  std::size_t m = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (m >= 2 && turn(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
    h[m++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = m + 1; i-- > 0;) {
    while (m >= t && turn(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
    h[m++] = pts[i];
  }
  h.resize(m - 1);
  std::vector<Point> out;
  for (auto [x, y] : h) out.push_back(pt(x, y));
  return out;
}

// A random convex polygon with corners on the integer grid [-r, r]^2.
template <class Rng>
ConvexPolygon random_convex(Rng& rng, long r, std::size_t samples = 8) {
  std::uniform_int_distribution<long> coord(-r, r);
  for (;;) {
    std::vector<std::pair<long, long>> pts;
    for (std::size_t i = 0; i < samples; ++i) pts.emplace_back(coord(rng), coord(rng));
    auto h = hull(std::move(pts));
    if (h.size() >= 3) return ConvexPolygon(std::move(h));
  }
}

// Inside test by sign of every edge cross product, written from scratch.
inline int half_plane_location(const Point& q, const std::vector<Point>& corners) {
  bool on_boundary = false;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const Point& a = corners[i];
    const Point& b = corners[(i + 1) % corners.size()];
    const Rat c = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
    if (c < 0) return -1;
    if (c == 0) on_boundary = true;
  }
  return on_boundary ? 0 : 1;
}

// Region census by rasterising: classify the centre of every cell of a
// res x res grid over the padded bounding box, then flood-fill 4-connected
// cells with equal labels. Returns sign bits -> number of connected
// components. A fast double test decides clear cases; anything within
// `kSlack` of a boundary line is re-classified exactly with
// point_in_polygon, and cells landing exactly on a boundary separate
// components instead of joining one.
inline std::map<std::uint64_t, std::size_t> grid_census(const PolygonFamily& family, int res) {
  constexpr std::uint64_t kBoundary = ~std::uint64_t{0};
  constexpr double kSlack = 1e-9;
  Rat lo_x = family[0].corner(0).x, hi_x = lo_x, lo_y = family[0].corner(0).y, hi_y = lo_y;
  std::vector<std::vector<std::pair<double, double>>> polys;
  for (const auto& p : family.polygons()) {
    auto& d = polys.emplace_back();
    for (const auto& c : p.corners()) {
      d.emplace_back(to_double(c.x), to_double(c.y));
      lo_x = std::min(lo_x, c.x), hi_x = std::max(hi_x, c.x);
      lo_y = std::min(lo_y, c.y), hi_y = std::max(hi_y, c.y);
    }
  }
  const Rat pad_x = (hi_x - lo_x) / 20, pad_y = (hi_y - lo_y) / 20;
  lo_x -= pad_x, hi_x += pad_x, lo_y -= pad_y, hi_y += pad_y;
  const Rat step_x = (hi_x - lo_x) / res, step_y = (hi_y - lo_y) / res;
  const double scale = std::max(to_double(hi_x - lo_x), to_double(hi_y - lo_y));

  std::vector<Rat> xs;
  std::vector<double> xd;
  for (int col = 0; col < res; ++col) {
    xs.push_back(lo_x + (Rat(col) + Rat(1, 2)) * step_x);
    xd.push_back(to_double(xs.back()));
  }

  std::vector<std::uint64_t> label(static_cast<std::size_t>(res) * res);
  for (int row = 0; row < res; ++row) {
    const Rat ry = lo_y + (Rat(row) + Rat(1, 2)) * step_y;
    const double y = to_double(ry);
    for (int col = 0; col < res; ++col) {
      const Rat& rx = xs[col];
      const double x = xd[col];
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < polys.size() && bits != kBoundary; ++i) {
        const auto& poly = polys[i];
        bool inside = true;
        bool close = false;
        for (std::size_t j = 0; j < poly.size(); ++j) {
          const auto [ax, ay] = poly[j];
          const auto [bx, by] = poly[(j + 1) % poly.size()];
          const double c = (bx - ax) * (y - ay) - (by - ay) * (x - ax);
          if (std::abs(c) <= kSlack * scale * scale) close = true;
          else if (c < 0) inside = false;
        }
        if (close) {
          const Location loc = point_in_polygon({rx, ry}, family[i]);
          if (loc == Location::boundary) bits = kBoundary;
          else if (loc == Location::inside) bits |= std::uint64_t{1} << i;
        } else if (inside) {
          bits |= std::uint64_t{1} << i;
        }
      }
      label[static_cast<std::size_t>(row) * res + col] = bits;
    }
  }

  std::map<std::uint64_t, std::size_t> components;
  std::vector<char> seen(label.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < label.size(); ++start) {
    if (seen[start] || label[start] == kBoundary) continue;
    const std::uint64_t bits = label[start];
    ++components[bits];
    seen[start] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::size_t cell = stack.back();
      stack.pop_back();
      const int row = static_cast<int>(cell / res), col = static_cast<int>(cell % res);
      const int dr[] = {1, -1, 0, 0}, dc[] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        const int r = row + dr[d], c = col + dc[d];
        if (r < 0 || c < 0 || r >= res || c >= res) continue;
        const std::size_t next = static_cast<std::size_t>(r) * res + c;
        if (!seen[next] && label[next] == bits) {
          seen[next] = 1;
          stack.push_back(next);
        }
      }
    }
  }
  return components;
}

}  // namespace vennk::testing
