#include "vennk/transform.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "vennk/classify.hpp"

namespace vennk {

std::size_t degree_excess(const Arrangement& arr) { return pairwise_crossings(arr) - arr.vertex_count(); }

PolygonFamily perturb(const PolygonFamily& family, const Rat& epsilon, std::uint64_t seed,
                      std::vector<Translation>* applied, int max_retries) {
  if (epsilon <= 0) throw DomainError("perturbation epsilon must be positive");
  std::mt19937_64 rng(seed);
  PolygonFamily current = family;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    try {
      Arrangement::build(current);
      return current;
    } catch (const DegeneracyError& e) {
      const CurveId curve = (rng() & 1U) ? e.second() : e.first();
      const Point by = random_offset(epsilon, rng);
      current = current.with_polygon(curve, current[curve].translated(by));
      if (applied) applied->push_back({curve, by});
    }
  }
  throw Error(ErrorCode::retries_exhausted,
              "perturbation did not reach general position after " + std::to_string(max_retries) + " retries");
}

namespace {

// Index of the side of `poly` whose relative interior contains `at`.
std::size_t side_through(const ConvexPolygon& poly, const Point& at) {
  for (std::size_t s = 0; s < poly.size(); ++s) {
    const Segment side = poly.side(s);
    if (orientation(side.a, side.b, at) != Orientation::collinear) continue;
    const Rat t = dot(at - side.a, side.b - side.a);
    if (t > 0 && t < dot(side.b - side.a, side.b - side.a)) return s;
  }
  throw Error(ErrorCode::internal, "vertex " + format_point(at) + " is not on a side of '" + poly.label() + "'");
}

std::set<SignVector> present_signs(const Arrangement& arr) {
  std::set<SignVector> out;
  for (const auto& f : arr.faces()) out.insert(f.sign);
  return out;
}

enum class Rejection { none, degenerate, no_progress, lost_region };

}  // namespace

std::pair<PolygonFamily, SplitReport> split_to_simple(const PolygonFamily& family, const Rat& epsilon,
                                                      std::uint64_t seed) {
  if (epsilon <= 0) throw DomainError("split epsilon must be positive");
  constexpr int kAttemptsPerVertex = 32;
  constexpr int kHalvings = 40;

  Arrangement arr = Arrangement::build(family);
  SplitReport report;
  report.histogram_before = degree_histogram(arr);
  report.faces_before = arr.face_count();
  report.input_was_venn = report_for(arr, family).is_venn;
  const std::set<SignVector> required = present_signs(arr);

  std::mt19937_64 rng(seed);
  PolygonFamily current = family;
  while (degree_excess(arr) > 0) {
    const auto& verts = arr.vertices();
    const auto top = std::max_element(verts.begin(), verts.end(),
                                      [](const Vertex& a, const Vertex& b) { return a.degree() < b.degree(); });
    std::vector<CurveId> curves;
    for (HalfEdgeId h : top->outgoing) curves.push_back(arr.half_edges()[h].curve);
    std::sort(curves.begin(), curves.end());
    curves.erase(std::unique(curves.begin(), curves.end()), curves.end());

    const std::size_t excess = degree_excess(arr);
    Rejection last = Rejection::none;
    std::optional<std::pair<PolygonFamily, Arrangement>> accepted;
    SplitStep step;
    for (int attempt = 0; attempt < kAttemptsPerVertex && !accepted; ++attempt) {
      const CurveId c = curves[rng() % curves.size()];
      const Segment side = current[c].side(side_through(current[c], top->at));
      const Point dir = side.b - side.a;
      const Rat l1 = abs(dir.x) + abs(dir.y);
      // L1 length bounds the Euclidean one, so this offset has norm <= epsilon.
      Rat scale = epsilon * ratio(500 + static_cast<long>(rng() % 501), 1000) / l1;
      if (rng() & 1U) scale = -scale;
      Point by = scale * Point{-dir.y, dir.x};

      for (int h = 0; h < kHalvings && !accepted; ++h, by = Rat(1, 2) * by) {
        PolygonFamily candidate = current.with_polygon(c, current[c].translated(by));
        try {
          Arrangement next = Arrangement::build(candidate);
          if (degree_excess(next) >= excess || next.face_count() <= arr.face_count()) {
            last = Rejection::no_progress;
            continue;
          }
          const auto signs = present_signs(next);
          if (!std::includes(signs.begin(), signs.end(), required.begin(), required.end())) {
            last = Rejection::lost_region;
            continue;
          }
          step = SplitStep{{c, by}, top->degree(), arr.face_count(), next.face_count()};
          accepted.emplace(std::move(candidate), std::move(next));
        } catch (const DegeneracyError&) {
          last = Rejection::degenerate;
        }
      }
    }
    if (!accepted) {
      if (last == Rejection::lost_region) {
        throw Error(ErrorCode::epsilon_too_large,
                    "epsilon too large: every split of the vertex at " + format_point(top->at) + " lost a region");
      }
      throw Error(ErrorCode::retries_exhausted, "could not split the vertex at " + format_point(top->at));
    }
    report.steps.push_back(step);
    current = std::move(accepted->first);
    arr = std::move(accepted->second);
  }

  report.histogram_after = degree_histogram(arr);
  report.faces_after = arr.face_count();
  report.still_independent_family = report_for(arr, current).is_independent_family;
  return {std::move(current), std::move(report)};
}

}  // namespace vennk
