#include <cmath>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "vennk/geometry.hpp"

using namespace vennk;
using vennk::testing::pt;

TEST_CASE("parse_rat reads decimals, exponents and fractions exactly") {
  CHECK(parse_rat("-0.446") == ratio(-446, 1000));
  CHECK(parse_rat("12") == Rat(12));
  CHECK(parse_rat("1e-3") == ratio(1, 1000));
  CHECK(parse_rat("2.5E2") == Rat(250));
  CHECK(parse_rat("6/4") == ratio(3, 2));
  CHECK(parse_rat("+.5") == ratio(1, 2));
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("abc"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.2.3"), ParseError);
}

TEST_CASE("ratio is canonical") {
  const Rat r = ratio(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
}

TEST_CASE("format_rat round-trips") {
  CHECK(format_rat(ratio(-446, 1000)) == "-0.446");
  CHECK(format_rat(ratio(1, 3)) == "1/3");
  CHECK(format_rat(Rat(7)) == "7");
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000);
  for (int i = 0; i < 2000; ++i) {
    const Rat r = ratio(num(rng), den(rng));
    CHECK(parse_rat(format_rat(r)) == r);
  }
}

TEST_CASE("orientation") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::left);
  CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == Orientation::right);
  CHECK(orientation(pt(0, 0), pt(1, 1), pt(3, 3)) == Orientation::collinear);
  // Near-collinear triple that double arithmetic gets wrong.
  CHECK(orientation(pt("0.1", "0.1"), pt("0.3", "0.3"), pt("0.7", "0.7000000000000001")) == Orientation::left);
}

TEST_CASE("segment_intersection examples") {
  using K = SegmentIntersection::Kind;
  SUBCASE("proper crossing") {
    const auto r = segment_intersection({pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)});
    CHECK(r.kind == K::point);
    CHECK(r.at == pt(1, 1));
    CHECK(r.proper());
  }
  SUBCASE("disjoint") {
    CHECK(segment_intersection({pt(0, 0), pt(1, 0)}, {pt(0, 1), pt(1, 1)}).kind == K::empty);
  }
  SUBCASE("shared endpoint") {
    const auto r = segment_intersection({pt(0, 0), pt(1, 0)}, {pt(1, 0), pt(1, 1)});
    CHECK(r.kind == K::point);
    CHECK(r.at == pt(1, 0));
    CHECK_FALSE(r.interior_first);
    CHECK_FALSE(r.interior_second);
  }
  SUBCASE("T junction") {
    const auto r = segment_intersection({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(1, 1)});
    CHECK(r.kind == K::point);
    CHECK(r.interior_first);
    CHECK_FALSE(r.interior_second);
  }
  SUBCASE("collinear overlap") {
    CHECK(segment_intersection({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(3, 0)}).kind == K::overlap);
  }
  SUBCASE("collinear touching at one end") {
    const auto r = segment_intersection({pt(0, 0), pt(1, 0)}, {pt(1, 0), pt(3, 0)});
    CHECK(r.kind == K::point);
    CHECK(r.at == pt(1, 0));
  }
  SUBCASE("collinear apart") {
    CHECK(segment_intersection({pt(0, 0), pt(1, 0)}, {pt(2, 0), pt(3, 0)}).kind == K::empty);
  }
}

namespace {

// Cramer's rule on the two parametric lines; independent of the library code.
SegmentIntersection::Kind cramer_kind(const Segment& s, const Segment& t, Point* at) {
  const Rat dx1 = s.b.x - s.a.x, dy1 = s.b.y - s.a.y;
  const Rat dx2 = t.b.x - t.a.x, dy2 = t.b.y - t.a.y;
  const Rat det = dx1 * dy2 - dy1 * dx2;
  const Rat rx = t.a.x - s.a.x, ry = t.a.y - s.a.y;
  if (det == 0) {
    if (rx * dy1 - ry * dx1 != 0) return SegmentIntersection::Kind::empty;
    // Collinear: project onto the dominant axis of s.
    const bool use_x = dx1 != 0;
    auto key = [&](const Point& p) { return use_x ? p.x : p.y; };
    Rat lo1 = key(s.a), hi1 = key(s.b), lo2 = key(t.a), hi2 = key(t.b);
    if (lo1 > hi1) std::swap(lo1, hi1);
    if (lo2 > hi2) std::swap(lo2, hi2);
    const Rat lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return SegmentIntersection::Kind::empty;
    if (lo < hi) return SegmentIntersection::Kind::overlap;
    *at = key(s.a) == lo ? s.a : key(s.b) == lo ? s.b : key(t.a) == lo ? t.a : t.b;
    return SegmentIntersection::Kind::point;
  }
  const Rat u = (rx * dy2 - ry * dx2) / det;
  const Rat v = (rx * dy1 - ry * dx1) / det;
  if (u < 0 || u > 1 || v < 0 || v > 1) return SegmentIntersection::Kind::empty;
  *at = {s.a.x + u * dx1, s.a.y + u * dy1};
  return SegmentIntersection::Kind::point;
}

}  // namespace

TEST_CASE("segment_intersection agrees with a Cramer's-rule oracle") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-4, 4);  // small grid forces many degenerate cases
  int checked = 0;
  while (checked < 5000) {
    const Segment s{pt(c(rng), c(rng)), pt(c(rng), c(rng))};
    const Segment t{pt(c(rng), c(rng)), pt(c(rng), c(rng))};
    if (s.a == s.b || t.a == t.b) continue;
    ++checked;
    Point at;
    const auto expected = cramer_kind(s, t, &at);
    const auto got = segment_intersection(s, t);
    REQUIRE(got.kind == expected);
    if (expected == SegmentIntersection::Kind::point) CHECK(got.at == at);
    // Symmetric in its arguments.
    CHECK(segment_intersection(t, s).kind == expected);
  }
}

TEST_CASE("ConvexPolygon rejects invalid corner lists") {
  using K = ConvexityViolation::Kind;
  auto kind_of = [](std::vector<Point> v) { return validate_convex(std::span<const Point>(v))->kind; };
  CHECK(kind_of({pt(0, 0), pt(1, 0)}) == K::too_few_corners);
  CHECK(kind_of({pt(0, 0), pt(1, 0), pt(1, 0), pt(0, 1)}) == K::duplicate_corner);
  CHECK(kind_of({pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1)}) == K::collinear);
  CHECK(kind_of({pt(0, 0), pt(0, 1), pt(1, 0)}) == K::reflex);
  CHECK(kind_of({pt(0, 0), pt(2, 0), pt(1, 1), pt(2, 2), pt(0, 2)}) == K::reflex);
  // A pentagram: every turn is left but it winds twice.
  CHECK(kind_of({pt(0, 10), pt(-6, -8), pt(10, 3), pt(-10, 3), pt(6, -8)}) == K::winding);
  CHECK_THROWS_AS(ConvexPolygon({pt(0, 0), pt(0, 1), pt(1, 0)}), DomainError);
  CHECK_NOTHROW(ConvexPolygon({pt(0, 0), pt(1, 0), pt(0, 1)}));
}

TEST_CASE("point_in_polygon examples") {
  const auto sq = testing::square(0, 0, 2);
  CHECK(point_in_polygon(pt(1, 1), sq) == Location::inside);
  CHECK(point_in_polygon(pt(2, 1), sq) == Location::boundary);
  CHECK(point_in_polygon(pt(0, 0), sq) == Location::boundary);
  CHECK(point_in_polygon(pt(3, 1), sq) == Location::outside);
  CHECK(point_in_polygon(pt(-1, -1), sq) == Location::outside);
}

TEST_CASE("point_in_polygon agrees with a half-plane oracle on random polygons") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> q(-12, 12);
  for (int pair = 0; pair < 1000; ++pair) {
    const auto poly = testing::random_convex(rng, 10);
    REQUIRE_FALSE(validate_convex(poly).has_value());
    for (int i = 0; i < 8; ++i) {
      const Point p{ratio(q(rng), 1), ratio(q(rng), 1)};
      const int expected = testing::half_plane_location(p, poly.corners());
      const Location got = point_in_polygon(p, poly);
      CHECK(got == (expected > 0 ? Location::inside : expected == 0 ? Location::boundary : Location::outside));
    }
  }
}

TEST_CASE("rational_rotation is exact on quarter turns") {
  const auto r0 = rational_rotation(0, 7, 12);
  CHECK(r0.cos == 1);
  CHECK(r0.sin == 0);
  const auto r1 = rational_rotation(1, 4, 12);
  CHECK(r1.cos == 0);
  CHECK(r1.sin == 1);
  const auto r2 = rational_rotation(2, 4, 12);
  CHECK(r2.cos == -1);
  CHECK(r2.sin == 0);
  CHECK(r1.apply(pt(1, 0)) == pt(0, 1));
}

TEST_CASE("rational_rotation matches long double trigonometry to the requested digits") {
  const long double pi = 3.141592653589793238462643383279502884L;
  for (int n : {3, 5, 7, 11, 12}) {
    for (int i = 0; i < n; ++i) {
      const auto r = rational_rotation(i, n, 12);
      const long double angle = 2 * pi * i / n;
      const long double scale = 1e12L;
      CHECK(r.cos.get_den() <= mpz_class("1000000000000"));
      const long double c = std::round(std::cos(angle) * scale) / scale;
      const long double s = std::round(std::sin(angle) * scale) / scale;
      CHECK(std::fabs(static_cast<long double>(to_double(r.cos)) - c) < 1e-13L);
      CHECK(std::fabs(static_cast<long double>(to_double(r.sin)) - s) < 1e-13L);
    }
  }
}

TEST_CASE("rotate_about_origin keeps a polygon convex and counter-clockwise") {
  const ConvexPolygon g({pt("-0.446", "0"), pt("-0.123", "-0.433"), pt("0.699", "0.061"), pt("-0.081", "0.451")});
  for (int i = 0; i < 7; ++i) {
    const auto r = rotate_about_origin(g, i, 7, 12);
    CHECK_FALSE(validate_convex(r).has_value());
  }
  CHECK(rotate_about_origin(g, 0, 7, 12).corners() == g.corners());
}

TEST_CASE("translated moves every corner") {
  const auto sq = testing::square(0, 0, 1).translated(pt(2, 3));
  CHECK(sq.corner(0) == pt(2, 3));
  CHECK(sq.corner(2) == pt(3, 4));
}
