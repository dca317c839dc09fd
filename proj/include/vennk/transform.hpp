#pragma once

// Small exact translations of whole polygons: removing degeneracies and
// splitting vertices where three or more curves meet.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "vennk/arrangement.hpp"

namespace vennk {

struct Translation {
  CurveId curve = 0;
  Point by;

  friend bool operator==(const Translation&, const Translation&) = default;
};

/// A vector whose Euclidean norm is at most `epsilon`, with rational
/// coordinates on a grid of epsilon / 1000.
template <class Rng>
Point random_offset(const Rat& epsilon, Rng& rng);

/// Translates offending polygons by random vectors of norm <= epsilon until
/// the family builds without degeneracy errors. A family that already
/// builds is returned unchanged. Throws Error(retries_exhausted).
PolygonFamily perturb(const PolygonFamily& family, const Rat& epsilon, std::uint64_t seed,
                      std::vector<Translation>* applied = nullptr, int max_retries = 64);

struct SplitStep {
  Translation translation;
  std::size_t vertex_degree = 0;  // degree of the vertex being split
  std::size_t faces_before = 0;
  std::size_t faces_after = 0;
};

struct SplitReport {
  std::map<std::size_t, std::size_t> histogram_before;
  std::map<std::size_t, std::size_t> histogram_after;
  std::size_t faces_before = 0;
  std::size_t faces_after = 0;
  std::vector<SplitStep> steps;
  bool input_was_venn = false;
  bool still_independent_family = false;
};

/// Reduces every vertex to degree four by translating, one at a time, a
/// polygon through a highest-degree vertex perpendicular to its side there.
/// Each accepted step strictly increases the face count and keeps every
/// sign vector the input had; a step that fails either check is retried at
/// half the distance.
std::pair<PolygonFamily, SplitReport> split_to_simple(const PolygonFamily& family, const Rat& epsilon,
                                                      std::uint64_t seed);

/// Sum over vertices of (crossing pairs at the vertex - 1); zero iff simple.
std::size_t degree_excess(const Arrangement& arr);

}  // namespace vennk

#include <random>

template <class Rng>
vennk::Point vennk::random_offset(const Rat& epsilon, Rng& rng) {
  constexpr long grid = 1000;
  std::uniform_int_distribution<long> coord(-grid, grid);
  for (;;) {
    const long a = coord(rng);
    const long b = coord(rng);
    if (a * a + b * b > grid * grid || (a == 0 && b == 0)) continue;
    return {epsilon * ratio(a, grid), epsilon * ratio(b, grid)};
  }
}
