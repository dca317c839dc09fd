#pragma once

// Planar subdivision induced by the boundaries of a family of convex
// polygons, stored as a half-edge structure. Vertices are points where two
// or more boundaries cross; corners are not vertices.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "vennk/geometry.hpp"

namespace vennk {

using CurveId = std::size_t;
using VertexId = std::size_t;
using HalfEdgeId = std::size_t;
using EdgeId = std::size_t;
using FaceId = std::size_t;

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kMaxCurves = 63;

/// Bit i set iff the region lies inside curve i.
class SignVector {
 public:
  SignVector() = default;
  SignVector(std::uint64_t bits, std::size_t n) : bits_(bits), n_(n) {}

  static SignVector zeros(std::size_t n) { return {0, n}; }
  static SignVector ones(std::size_t n) { return {n == 64 ? ~0ULL : ((1ULL << n) - 1), n}; }
  /// "0110" where character i is bit i.
  static SignVector from_string(const std::string& s);

  bool test(std::size_t i) const { return (bits_ >> i) & 1U; }
  SignVector flipped(std::size_t i) const { return {bits_ ^ (1ULL << i), n_}; }
  std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return n_; }
  int weight() const { return __builtin_popcountll(bits_); }
  std::string str() const;

  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::uint64_t bits_ = 0;
  std::size_t n_ = 0;
};

class PolygonFamily {
 public:
  PolygonFamily() = default;
  explicit PolygonFamily(std::vector<ConvexPolygon> polygons);

  const std::vector<ConvexPolygon>& polygons() const { return polygons_; }
  const ConvexPolygon& operator[](std::size_t i) const { return polygons_[i]; }
  std::size_t size() const { return polygons_.size(); }
  /// Largest corner count over the family.
  std::size_t max_corners() const;
  /// k when every polygon has exactly k corners, 0 otherwise.
  std::size_t uniform_corners() const;

  PolygonFamily with_polygon(std::size_t i, ConvexPolygon p) const;

  friend bool operator==(const PolygonFamily&, const PolygonFamily&) = default;

 private:
  std::vector<ConvexPolygon> polygons_;
};

/// Geometry that violates general position. Thrown by Arrangement::build.
class DegeneracyError : public Error {
 public:
  enum class Kind { overlap, corner_incidence, tangency };

  DegeneracyError(Kind kind, CurveId first, CurveId second, Point where, const std::string& what)
      : Error(ErrorCode::degenerate, what), kind_(kind), first_(first), second_(second), where_(std::move(where)) {}

  Kind kind() const { return kind_; }
  CurveId first() const { return first_; }
  CurveId second() const { return second_; }
  const Point& where() const { return where_; }

 private:
  Kind kind_;
  CurveId first_;
  CurveId second_;
  Point where_;
};

const char* to_string(DegeneracyError::Kind kind);

struct Vertex {
  Point at;
  std::vector<HalfEdgeId> outgoing;  // counter-clockwise order

  std::size_t degree() const { return outgoing.size(); }
};

struct HalfEdge {
  VertexId origin = kNone;  // kNone for a closed curve without vertices
  HalfEdgeId twin = kNone;
  HalfEdgeId next = kNone;
  EdgeId edge = kNone;
  CurveId curve = kNone;
  bool forward = true;  // runs counter-clockwise along its polygon
  FaceId face = kNone;  // face on the left
};

/// Portion of one curve between consecutive vertices. `path` runs in the
/// polygon's counter-clockwise direction and includes any corners; a closed
/// curve without vertices repeats its first point at the end.
struct Edge {
  CurveId curve = kNone;
  std::vector<Point> path;
  HalfEdgeId forward_half = kNone;
  bool closed_loop = false;
};

struct Face {
  FaceId id = kNone;
  HalfEdgeId outer_cycle = kNone;  // kNone for the unbounded face
  std::vector<HalfEdgeId> holes;   // one half-edge per inner boundary cycle
  SignVector sign;
  bool is_outer = false;
};

class Arrangement {
 public:
  /// Throws DegeneracyError on overlapping sides, a corner on a foreign
  /// boundary, or a tangential touch; throws Error(internal) if a structural
  /// invariant (Euler, sign consistency) fails.
  static Arrangement build(const PolygonFamily& family);

  std::size_t curve_count() const { return n_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  FaceId outer_face() const { return outer_face_; }
  std::size_t component_count() const { return components_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  /// Half-edges of the cycle starting at h, in `next` order.
  std::vector<HalfEdgeId> cycle(HalfEdgeId h) const;
  /// Closed polyline traced by a boundary cycle (first point not repeated).
  std::vector<Point> cycle_polyline(HalfEdgeId h) const;
  /// A rational point strictly inside the face, off every curve.
  Point interior_sample(FaceId f) const;

 private:
  std::size_t n_ = 0;
  std::size_t components_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  FaceId outer_face_ = kNone;
  std::vector<ConvexPolygon> polygons_;
};

std::map<std::size_t, std::size_t> degree_histogram(const Arrangement& arr);

/// Number of edges of each curve that bound the outer face.
std::map<CurveId, std::size_t> outer_face_curve_edges(const Arrangement& arr);

/// Sum over vertices of the number of curve pairs crossing there; equals V
/// for a simple arrangement.
std::size_t pairwise_crossings(const Arrangement& arr);

}  // namespace vennk
