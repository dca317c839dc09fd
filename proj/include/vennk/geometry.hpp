#pragma once

// Exact rational plane geometry. Every predicate here is evaluated without
// rounding; degenerate outcomes (collinear, boundary, overlap) are reported
// as such and never resolved by guessing.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vennk/error.hpp"

namespace vennk {

using Rat = mpq_class;

/// Parses "-0.446", "12", "1e-3", or "p/q" into an exact rational.
/// Throws ParseError on malformed input.
Rat parse_rat(std::string_view text);

/// Decimal when the denominator divides a power of ten, "p/q" otherwise.
/// parse_rat(format_rat(r)) == r for every r.
std::string format_rat(const Rat& r);

double to_double(const Rat& r);

/// num/den in canonical form.
Rat ratio(long num, long den);

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

std::string format_point(const Point& p);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rat& s, const Point& p);
Rat cross(const Point& a, const Point& b);
Rat dot(const Point& a, const Point& b);

enum class Orientation { right = -1, collinear = 0, left = 1 };

/// Sign of (b - a) x (c - a).
Orientation orientation(const Point& a, const Point& b, const Point& c);

struct Segment {
  Point a;
  Point b;
};

struct SegmentIntersection {
  enum class Kind { empty, point, overlap };
  Kind kind = Kind::empty;
  Point at;                    // valid for Kind::point
  bool interior_first = false;  // `at` lies strictly inside the first segment
  bool interior_second = false;

  bool proper() const { return kind == Kind::point && interior_first && interior_second; }
};

/// Total classification of two closed segments with distinct endpoints.
SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

enum class Location { inside, boundary, outside };

class ConvexPolygon {
 public:
  /// Validates every invariant; throws DomainError with the violation otherwise.
  ConvexPolygon(std::vector<Point> corners, std::string label = {});

  const std::vector<Point>& corners() const { return corners_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  std::size_t size() const { return corners_.size(); }
  const Point& corner(std::size_t i) const { return corners_[i % corners_.size()]; }
  Segment side(std::size_t i) const { return {corner(i), corner(i + 1)}; }

  ConvexPolygon translated(const Point& by) const;

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
    return a.corners_ == b.corners_ && a.label_ == b.label_;
  }

 private:
  std::vector<Point> corners_;
  std::string label_;
};

struct ConvexityViolation {
  enum class Kind { too_few_corners, duplicate_corner, collinear, reflex, winding };
  Kind kind;
  std::size_t index;  // first corner of the offending triple
  std::string message;
};

/// Checks k >= 3, distinct corners, and a strict left turn at every
/// consecutive (cyclic) corner triple. A clockwise polygon reports `reflex`.
std::optional<ConvexityViolation> validate_convex(std::span<const Point> corners);
inline std::optional<ConvexityViolation> validate_convex(const ConvexPolygon& p) {
  return validate_convex(std::span<const Point>(p.corners()));
}

Location point_in_polygon(const Point& pt, const ConvexPolygon& p);

/// Rational stand-in for the rotation by 2*pi*i/n: cos and sin rounded to
/// `digits` decimal places. Exact for multiples of a quarter turn.
struct Rotation {
  Rat cos;
  Rat sin;

  Point apply(const Point& p) const;
};

Rotation rational_rotation(int i, int n, int digits);

ConvexPolygon rotate(const ConvexPolygon& p, const Rotation& r);
ConvexPolygon rotate_about_origin(const ConvexPolygon& p, int i, int n, int digits);

}  // namespace vennk
