#include "vennk/geometry.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vennk {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

int sign_of(const Rat& r) { return sgn(r); }

}  // namespace

Rat parse_rat(std::string_view text) {
  auto fail = [&]() -> Rat { throw ParseError("malformed number '" + std::string(text) + "'"); };
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
      neg = num[0] == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rat r(mpz_class(std::string(num), 10), d);
    r.canonicalize();
    return neg ? Rat(-r) : r;
  }

  std::string_view rest = text;
  bool neg = false;
  if (rest[0] == '-' || rest[0] == '+') {
    neg = rest[0] == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = rest.substr(e + 1);
    bool eneg = false;
    if (!exp.empty() && (exp[0] == '-' || exp[0] == '+')) {
      eneg = exp[0] == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) return fail();
    exponent = std::stol(std::string(exp)) * (eneg ? -1 : 1);
    rest = rest.substr(0, e);
  }
  std::string digits;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view whole = rest.substr(0, dot);
    std::string_view frac = rest.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) return fail();
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(rest)) return fail();
    digits = std::string(rest);
  }
  Rat r(mpz_class(digits, 10));
  if (exponent > 0) r *= pow10(static_cast<unsigned long>(exponent));
  if (exponent < 0) r /= pow10(static_cast<unsigned long>(-exponent));
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

std::string format_rat(const Rat& r) {
  mpz_class den = r.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return r.get_num().get_str() + "/" + r.get_den().get_str();

  unsigned long places = std::max(twos, fives);
  mpz_class scaled = r.get_num() * pow10(places) / r.get_den();
  bool neg = scaled < 0;
  std::string s = mpz_class(abs(scaled)).get_str();
  if (places > 0) {
    if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
    s.insert(s.size() - places, ".");
  }
  return neg ? "-" + s : s;
}

double to_double(const Rat& r) { return r.get_d(); }

Rat ratio(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string format_point(const Point& p) { return "(" + format_rat(p.x) + ", " + format_rat(p.y) + ")"; }

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rat& s, const Point& p) { return {s * p.x, s * p.y}; }
Rat cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rat dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return static_cast<Orientation>(sign_of(det));
}

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  SegmentIntersection out;
  const Point r = s1.b - s1.a;
  const Point s = s2.b - s2.a;
  const Point qp = s2.a - s1.a;
  const Rat denom = cross(r, s);

  if (denom == 0) {
    if (cross(qp, r) != 0) return out;  // parallel, distinct lines
    const Rat rr = dot(r, r);
    Rat t0 = dot(qp, r) / rr;
    Rat t1 = dot(s2.b - s1.a, r) / rr;
    if (t0 > t1) std::swap(t0, t1);
    const Rat lo = t0 > 0 ? t0 : Rat(0);
    const Rat hi = t1 < 1 ? t1 : Rat(1);
    if (lo > hi) return out;
    if (lo < hi) {
      out.kind = SegmentIntersection::Kind::overlap;
      return out;
    }
    out.kind = SegmentIntersection::Kind::point;
    out.at = s1.a + lo * r;
    out.interior_first = lo > 0 && lo < 1;
    // A single shared point of two collinear segments is an endpoint of both.
    out.interior_second = false;
    return out;
  }

  const Rat t = cross(qp, s) / denom;
  const Rat u = cross(qp, r) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return out;
  out.kind = SegmentIntersection::Kind::point;
  if (t == 0) {
    out.at = s1.a;
  } else if (t == 1) {
    out.at = s1.b;
  } else if (u == 0) {
    out.at = s2.a;
  } else if (u == 1) {
    out.at = s2.b;
  } else {
    out.at = s1.a + t * r;
  }
  out.interior_first = t > 0 && t < 1;
  out.interior_second = u > 0 && u < 1;
  return out;
}

std::optional<ConvexityViolation> validate_convex(std::span<const Point> c) {
  using Kind = ConvexityViolation::Kind;
  const std::size_t k = c.size();
  if (k < 3) {
    return ConvexityViolation{Kind::too_few_corners, 0,
                              "polygon has " + std::to_string(k) + " corners, at least 3 required"};
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (c[i] == c[j]) {
        return ConvexityViolation{Kind::duplicate_corner, i,
                                  "corners " + std::to_string(i) + " and " + std::to_string(j) +
                                      " coincide at " + format_point(c[i])};
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = c[i];
    const Point& b = c[(i + 1) % k];
    const Point& d = c[(i + 2) % k];
    switch (orientation(a, b, d)) {
      case Orientation::left:
        break;
      case Orientation::collinear:
        return ConvexityViolation{Kind::collinear, i,
                                  "corners " + std::to_string(i) + ".." + std::to_string((i + 2) % k) +
                                      " are collinear"};
      case Orientation::right:
        return ConvexityViolation{Kind::reflex, i,
                                  "corners " + std::to_string(i) + ".." + std::to_string((i + 2) % k) +
                                      " turn clockwise"};
    }
  }
  // All left turns still admits star polygons that wind more than once.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i || j == (i + 1) % k) continue;
      if (orientation(c[i], c[(i + 1) % k], c[j]) != Orientation::left) {
        return ConvexityViolation{Kind::winding, i,
                                  "corner " + std::to_string(j) + " is not left of side " + std::to_string(i) +
                                      " (boundary winds more than once)"};
      }
    }
  }
  return std::nullopt;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> corners, std::string label)
    : corners_(std::move(corners)), label_(std::move(label)) {
  if (auto v = validate_convex(std::span<const Point>(corners_))) {
    throw DomainError("polygon '" + label_ + "' is not strictly convex and counter-clockwise: " + v->message);
  }
}

ConvexPolygon ConvexPolygon::translated(const Point& by) const {
  std::vector<Point> moved;
  moved.reserve(corners_.size());
  for (const Point& p : corners_) moved.push_back(p + by);
  return ConvexPolygon(std::move(moved), label_);
}

Location point_in_polygon(const Point& pt, const ConvexPolygon& p) {
  bool on_line = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    switch (orientation(p.corner(i), p.corner(i + 1), pt)) {
      case Orientation::right:
        return Location::outside;
      case Orientation::collinear:
        on_line = true;
        break;
      case Orientation::left:
        break;
    }
  }
  return on_line ? Location::boundary : Location::inside;
}

Point Rotation::apply(const Point& p) const { return {cos * p.x - sin * p.y, sin * p.x + cos * p.y}; }

Rotation rational_rotation(int i, int n, int digits) {
  if (n < 1 || i < 0 || i >= n) {
    throw DomainError("rotation index " + std::to_string(i) + " out of range for order " + std::to_string(n));
  }
  if (digits < 1 || digits > 200) throw DomainError("rotation digits must be in [1, 200]");
  if (i == 0) return {Rat(1), Rat(0)};

  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 4 + 96);
  mpfr_t angle, c, s, scale;
  mpfr_inits2(prec, angle, c, s, scale, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(angle, MPFR_RNDN);
  mpfr_mul_ui(angle, angle, 2UL * static_cast<unsigned long>(i), MPFR_RNDN);
  mpfr_div_ui(angle, angle, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_sin_cos(s, c, angle, MPFR_RNDN);
  const mpz_class unit = pow10(static_cast<unsigned long>(digits));
  mpfr_set_z(scale, unit.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(c, c, scale, MPFR_RNDN);
  mpfr_mul(s, s, scale, MPFR_RNDN);
  mpz_class cz, sz;
  mpfr_get_z(cz.get_mpz_t(), c, MPFR_RNDN);
  mpfr_get_z(sz.get_mpz_t(), s, MPFR_RNDN);
  mpfr_clears(angle, c, s, scale, static_cast<mpfr_ptr>(nullptr));

  Rotation r{Rat(cz, unit), Rat(sz, unit)};
  r.cos.canonicalize();
  r.sin.canonicalize();
  return r;
}

ConvexPolygon rotate(const ConvexPolygon& p, const Rotation& r) {
  if (r.cos == 1 && r.sin == 0) return p;
  std::vector<Point> out;
  out.reserve(p.size());
  for (const Point& c : p.corners()) out.push_back(r.apply(c));
  return ConvexPolygon(std::move(out), p.label());
}

ConvexPolygon rotate_about_origin(const ConvexPolygon& p, int i, int n, int digits) {
  return rotate(p, rational_rotation(i, n, digits));
}

}  // namespace vennk
