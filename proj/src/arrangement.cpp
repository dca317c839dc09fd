#include "vennk/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace vennk {

SignVector SignVector::from_string(const std::string& s) {
  if (s.size() > 64) throw ParseError("sign vector longer than 64 bits");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      bits |= 1ULL << i;
    } else if (s[i] != '0') {
      throw ParseError("sign vector '" + s + "' must contain only 0 and 1");
    }
  }
  return {bits, s.size()};
}

std::string SignVector::str() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

PolygonFamily::PolygonFamily(std::vector<ConvexPolygon> polygons) : polygons_(std::move(polygons)) {
  if (polygons_.empty()) throw DomainError("a polygon family needs at least one polygon");
  if (polygons_.size() > kMaxCurves) {
    throw DomainError("at most " + std::to_string(kMaxCurves) + " polygons are supported");
  }
}

std::size_t PolygonFamily::max_corners() const {
  std::size_t k = 0;
  for (const auto& p : polygons_) k = std::max(k, p.size());
  return k;
}

std::size_t PolygonFamily::uniform_corners() const {
  const std::size_t k = polygons_.front().size();
  for (const auto& p : polygons_) {
    if (p.size() != k) return 0;
  }
  return k;
}

PolygonFamily PolygonFamily::with_polygon(std::size_t i, ConvexPolygon p) const {
  auto copy = polygons_;
  copy.at(i) = std::move(p);
  return PolygonFamily(std::move(copy));
}

const char* to_string(DegeneracyError::Kind kind) {
  switch (kind) {
    case DegeneracyError::Kind::overlap:
      return "overlap";
    case DegeneracyError::Kind::corner_incidence:
      return "corner_incidence";
    case DegeneracyError::Kind::tangency:
      return "tangency";
  }
  return "unknown";
}

namespace {

std::string curve_name(const PolygonFamily& family, CurveId c) {
  const auto& label = family[c].label();
  return label.empty() ? "#" + std::to_string(c) : label;
}

// 0 for directions in [0, pi), 1 for [pi, 2 pi).
int half_plane(const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

bool angle_less(const Point& a, const Point& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

Rat twice_signed_area(const std::vector<Point>& poly) {
  Rat area = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) area += cross(poly[i], poly[(i + 1) % poly.size()]);
  return area;
}

// Winding number of a closed polyline around q; q must not lie on it.
int winding_number(const std::vector<Point>& poly, const Point& q) {
  int wn = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    if (a.y <= q.y) {
      if (b.y > q.y && orientation(a, b, q) == Orientation::left) ++wn;
    } else if (b.y <= q.y && orientation(a, b, q) == Orientation::right) {
      --wn;
    }
  }
  return wn;
}

struct Crossing {
  Point at;
  CurveId curve_a;
  std::size_t side_a;
  CurveId curve_b;
  std::size_t side_b;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<HalfEdgeId> Arrangement::cycle(HalfEdgeId h) const {
  std::vector<HalfEdgeId> out;
  HalfEdgeId cur = h;
  do {
    out.push_back(cur);
    cur = half_edges_[cur].next;
  } while (cur != h);
  return out;
}

std::vector<Point> Arrangement::cycle_polyline(HalfEdgeId h) const {
  std::vector<Point> out;
  for (HalfEdgeId id : cycle(h)) {
    const HalfEdge& he = half_edges_[id];
    const auto& path = edges_[he.edge].path;
    if (he.forward) {
      out.insert(out.end(), path.begin(), path.end() - 1);
    } else {
      out.insert(out.end(), path.rbegin(), path.rend() - 1);
    }
  }
  return out;
}

Point Arrangement::interior_sample(FaceId f) const {
  const Face& face = faces_.at(f);
  const HalfEdgeId h = face.outer_cycle != kNone ? face.outer_cycle : face.holes.front();
  const HalfEdge& he = half_edges_[h];
  const auto& path = edges_[he.edge].path;
  const Point& p0 = he.forward ? path[0] : path[path.size() - 1];
  const Point& p1 = he.forward ? path[1] : path[path.size() - 2];
  const Point mid = Rat(1, 2) * (p0 + p1);
  const Point d = p1 - p0;
  const Point left{-d.y, d.x};

  Rat t(1, 2);
  for (int attempt = 0; attempt < 256; ++attempt, t /= 2) {
    const Segment probe{mid, mid + t * left};
    bool clear = true;
    for (const auto& poly : polygons_) {
      for (std::size_t s = 0; s < poly.size() && clear; ++s) {
        const auto hit = segment_intersection(probe, poly.side(s));
        if (hit.kind == SegmentIntersection::Kind::overlap) clear = false;
        if (hit.kind == SegmentIntersection::Kind::point && !(hit.at == mid)) clear = false;
      }
      if (!clear) break;
    }
    if (clear) return probe.b;
  }
  throw Error(ErrorCode::internal, "could not place a sample point inside face " + std::to_string(f));
}

Arrangement Arrangement::build(const PolygonFamily& family) {
  Arrangement arr;
  const std::size_t n = family.size();
  arr.n_ = n;
  arr.polygons_ = family.polygons();

  // Pairwise boundary crossings; anything but a proper crossing is degenerate.
  std::vector<Crossing> crossings;
  for (CurveId i = 0; i < n; ++i) {
    for (CurveId j = i + 1; j < n; ++j) {
      const auto& pi = family[i];
      const auto& pj = family[j];
      for (std::size_t a = 0; a < pi.size(); ++a) {
        for (std::size_t b = 0; b < pj.size(); ++b) {
          const auto hit = segment_intersection(pi.side(a), pj.side(b));
          if (hit.kind == SegmentIntersection::Kind::empty) continue;
          const std::string pair = curve_name(family, i) + " and " + curve_name(family, j);
          if (hit.kind == SegmentIntersection::Kind::overlap) {
            throw DegeneracyError(DegeneracyError::Kind::overlap, i, j, pi.side(a).a,
                                  "sides of " + pair + " overlap along a segment (not finitely intersecting)");
          }
          if (!hit.proper()) {
            throw DegeneracyError(DegeneracyError::Kind::corner_incidence, i, j, hit.at,
                                  "corner incidence between " + pair + " at " + format_point(hit.at));
          }
          crossings.push_back({hit.at, i, a, j, b});
        }
      }
    }
  }

  // Merge coincident crossings into vertices.
  std::map<Point, VertexId> vertex_of;
  for (const auto& c : crossings) {
    if (vertex_of.emplace(c.at, arr.vertices_.size()).second) arr.vertices_.push_back(Vertex{c.at, {}});
  }

  // Vertices on each side, ordered along the side.
  std::vector<std::vector<std::vector<VertexId>>> on_side(n);
  for (CurveId c = 0; c < n; ++c) on_side[c].resize(family[c].size());
  for (const auto& c : crossings) {
    const VertexId v = vertex_of.at(c.at);
    on_side[c.curve_a][c.side_a].push_back(v);
    on_side[c.curve_b][c.side_b].push_back(v);
  }

  DisjointSets components(n);
  for (const auto& c : crossings) components.unite(c.curve_a, c.curve_b);

  for (CurveId c = 0; c < n; ++c) {
    const auto& poly = family[c];
    const std::size_t k = poly.size();

    struct Stop {
      Point at;
      VertexId vertex;  // kNone for a corner
    };
    std::vector<Stop> stops;
    for (std::size_t s = 0; s < k; ++s) {
      stops.push_back({poly.corner(s), kNone});
      auto& vs = on_side[c][s];
      const Segment side = poly.side(s);
      const Point dir = side.b - side.a;
      std::sort(vs.begin(), vs.end(), [&](VertexId x, VertexId y) {
        return dot(arr.vertices_[x].at - side.a, dir) < dot(arr.vertices_[y].at - side.a, dir);
      });
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      for (VertexId v : vs) stops.push_back({arr.vertices_[v].at, v});
    }

    const auto first_vertex =
        std::find_if(stops.begin(), stops.end(), [](const Stop& s) { return s.vertex != kNone; });
    if (first_vertex == stops.end()) {
      Edge loop;
      loop.curve = c;
      loop.closed_loop = true;
      for (const auto& s : stops) loop.path.push_back(s.at);
      loop.path.push_back(stops.front().at);
      const EdgeId e = arr.edges_.size();
      const HalfEdgeId hf = arr.half_edges_.size();
      arr.half_edges_.push_back(HalfEdge{kNone, hf + 1, hf, e, c, true, kNone});
      arr.half_edges_.push_back(HalfEdge{kNone, hf, hf + 1, e, c, false, kNone});
      loop.forward_half = hf;
      arr.edges_.push_back(std::move(loop));
      continue;
    }
    std::rotate(stops.begin(), first_vertex, stops.end());
    stops.push_back(stops.front());

    Edge current;
    current.curve = c;
    current.path.push_back(stops.front().at);
    VertexId start = stops.front().vertex;
    for (std::size_t s = 1; s < stops.size(); ++s) {
      current.path.push_back(stops[s].at);
      if (stops[s].vertex == kNone) continue;
      const VertexId end = stops[s].vertex;
      const EdgeId e = arr.edges_.size();
      const HalfEdgeId hf = arr.half_edges_.size();
      arr.half_edges_.push_back(HalfEdge{start, hf + 1, kNone, e, c, true, kNone});
      arr.half_edges_.push_back(HalfEdge{end, hf, kNone, e, c, false, kNone});
      arr.vertices_[start].outgoing.push_back(hf);
      arr.vertices_[end].outgoing.push_back(hf + 1);
      current.forward_half = hf;
      arr.edges_.push_back(std::move(current));
      current = Edge{};
      current.curve = c;
      current.path.push_back(stops[s].at);
      start = end;
    }
  }

  // Angular order around each vertex, then face-walk successors.
  auto leaving_direction = [&](HalfEdgeId h) {
    const HalfEdge& he = arr.half_edges_[h];
    const auto& path = arr.edges_[he.edge].path;
    return he.forward ? path[1] - path[0] : path[path.size() - 2] - path.back();
  };
  for (auto& v : arr.vertices_) {
    std::vector<std::pair<Point, HalfEdgeId>> keyed;
    for (HalfEdgeId h : v.outgoing) keyed.emplace_back(leaving_direction(h), h);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    for (std::size_t i = 0; i < keyed.size(); ++i) v.outgoing[i] = keyed[i].second;
    if (v.degree() < 4 || v.degree() % 2 != 0) {
      throw Error(ErrorCode::internal, "vertex " + format_point(v.at) + " has degree " + std::to_string(v.degree()));
    }
  }
  for (const auto& v : arr.vertices_) {
    const std::size_t d = v.degree();
    for (std::size_t i = 0; i < d; ++i) {
      // The half-edge arriving along outgoing[i] continues clockwise.
      const HalfEdgeId arriving = arr.half_edges_[v.outgoing[i]].twin;
      arr.half_edges_[arriving].next = v.outgoing[(i + d - 1) % d];
    }
  }

  // Boundary cycles: positive area bounds a face from outside, negative
  // area is the outside of a connected component.
  struct CycleInfo {
    HalfEdgeId start;
    Rat area2;
    std::vector<Point> polyline;
    std::size_t component;
  };
  std::vector<CycleInfo> cycles;
  std::vector<std::size_t> cycle_of(arr.half_edges_.size(), kNone);
  for (HalfEdgeId h = 0; h < arr.half_edges_.size(); ++h) {
    if (cycle_of[h] != kNone) continue;
    for (HalfEdgeId id : arr.cycle(h)) cycle_of[id] = cycles.size();
    auto poly = arr.cycle_polyline(h);
    Rat area = twice_signed_area(poly);
    cycles.push_back({h, std::move(area), std::move(poly), components.find(arr.half_edges_[h].curve)});
  }

  std::vector<FaceId> face_of_cycle(cycles.size(), kNone);
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    if (cycles[ci].area2 > 0) {
      face_of_cycle[ci] = arr.faces_.size();
      Face f;
      f.id = arr.faces_.size();
      f.outer_cycle = cycles[ci].start;
      arr.faces_.push_back(std::move(f));
    } else if (cycles[ci].area2 == 0) {
      throw Error(ErrorCode::internal, "zero-area boundary cycle");
    }
  }
  arr.outer_face_ = arr.faces_.size();
  {
    Face outer;
    outer.id = arr.outer_face_;
    outer.is_outer = true;
    arr.faces_.push_back(std::move(outer));
  }

  std::vector<std::size_t> roots;
  for (CurveId c = 0; c < n; ++c) roots.push_back(components.find(c));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  arr.components_ = roots.size();

  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    if (cycles[ci].area2 > 0) continue;
    const Point& probe = cycles[ci].polyline.front();
    std::size_t best = kNone;
    for (std::size_t cj = 0; cj < cycles.size(); ++cj) {
      if (cycles[cj].area2 <= 0 || cycles[cj].component == cycles[ci].component) continue;
      if (winding_number(cycles[cj].polyline, probe) == 0) continue;
      if (best == kNone || cycles[cj].area2 < cycles[best].area2) best = cj;
    }
    const FaceId host = best == kNone ? arr.outer_face_ : face_of_cycle[best];
    face_of_cycle[ci] = host;
    arr.faces_[host].holes.push_back(cycles[ci].start);
  }
  for (HalfEdgeId h = 0; h < arr.half_edges_.size(); ++h) arr.half_edges_[h].face = face_of_cycle[cycle_of[h]];

  // Signs by breadth-first flood from the outer face.
  std::vector<std::vector<HalfEdgeId>> boundary(arr.faces_.size());
  for (HalfEdgeId h = 0; h < arr.half_edges_.size(); ++h) boundary[arr.half_edges_[h].face].push_back(h);
  std::vector<bool> seen(arr.faces_.size(), false);
  std::queue<FaceId> queue;
  arr.faces_[arr.outer_face_].sign = SignVector::zeros(n);
  seen[arr.outer_face_] = true;
  queue.push(arr.outer_face_);
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop();
    for (HalfEdgeId h : boundary[f]) {
      const HalfEdge& he = arr.half_edges_[h];
      const FaceId g = arr.half_edges_[he.twin].face;
      const SignVector across = arr.faces_[f].sign.flipped(he.curve);
      if (!seen[g]) {
        seen[g] = true;
        arr.faces_[g].sign = across;
        queue.push(g);
      } else if (arr.faces_[g].sign != across) {
        throw Error(ErrorCode::internal, "inconsistent sign assignment at face " + std::to_string(g));
      }
    }
  }
  for (const auto& he : arr.half_edges_) {
    if (arr.faces_[he.face].sign.test(he.curve) != he.forward) {
      throw Error(ErrorCode::internal, "face sign disagrees with curve orientation");
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::internal, "face adjacency graph is disconnected");
  }

  std::size_t loops = 0;
  for (const auto& e : arr.edges_) loops += e.closed_loop ? 1 : 0;
  const long euler = static_cast<long>(arr.vertices_.size() + loops) - static_cast<long>(arr.edges_.size()) +
                     static_cast<long>(arr.faces_.size());
  if (euler != 1 + static_cast<long>(arr.components_)) {
    throw Error(ErrorCode::internal, "Euler check failed: V - E + F = " + std::to_string(euler));
  }
  return arr;
}

std::map<std::size_t, std::size_t> degree_histogram(const Arrangement& arr) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& v : arr.vertices()) ++h[v.degree()];
  return h;
}

std::map<CurveId, std::size_t> outer_face_curve_edges(const Arrangement& arr) {
  std::map<CurveId, std::size_t> counts;
  for (CurveId c = 0; c < arr.curve_count(); ++c) counts[c] = 0;
  for (const auto& e : arr.edges()) {
    const HalfEdge& fwd = arr.half_edges()[e.forward_half];
    const HalfEdge& back = arr.half_edges()[fwd.twin];
    if (fwd.face == arr.outer_face() || back.face == arr.outer_face()) ++counts[e.curve];
  }
  return counts;
}

std::size_t pairwise_crossings(const Arrangement& arr) {
  std::size_t total = 0;
  for (const auto& v : arr.vertices()) {
    const std::size_t m = v.degree() / 2;
    total += m * (m - 1) / 2;
  }
  return total;
}

}  // namespace vennk
