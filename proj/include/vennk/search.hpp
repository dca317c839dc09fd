#pragma once

// Annealing search for rotationally symmetric Venn diagrams: a single
// generator polygon is jittered and its n rotated copies are scored by
// how far their arrangement is from a (simple) Venn diagram.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vennk/arrangement.hpp"

namespace vennk {

enum class SearchTarget { venn, simple_venn };

const char* to_string(SearchTarget t);
SearchTarget parse_target(const std::string& s);

struct SearchConfig {
  std::size_t n = 7;
  std::size_t k = 4;
  int digits = 12;
  Rat jitter_initial = ratio(5, 1000);
  Rat jitter_final = ratio(1, 10000);
  Rat jitter_grid = ratio(1, 1000000);  // jitter vectors are integer multiples of this
  long max_iterations = 20000;
  std::uint64_t seed = 1;
  SearchTarget target = SearchTarget::simple_venn;
  std::optional<ConvexPolygon> initial;
  double temperature_initial = 2.0;
  double temperature_final = 0.05;
  std::size_t walkers = 1;
  long progress_interval = 100;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

struct SearchState {
  ConvexPolygon generator;
  std::size_t deficiency = 0;
  long iteration = 0;
};

struct SearchProgress {
  std::size_t walker = 0;
  long iteration = 0;
  std::size_t current_deficiency = 0;
  std::size_t best_deficiency = 0;
  ConvexPolygon best_generator;
};

struct SearchResult {
  SearchState best;
  std::size_t walker = 0;
  long iterations_run = 0;  // by the winning walker
  bool cancelled = false;
  /// (iteration, deficiency) each time the winning walker's best improved.
  std::vector<std::pair<long, std::size_t>> improvements;
};

using ProgressCallback = std::function<void(const SearchProgress&)>;

/// Copy i is the generator rotated by 2 pi i / n with rationalised cos/sin.
PolygonFamily symmetric_family(const ConvexPolygon& generator, std::size_t n, int digits);

/// Missing sign vectors + surplus faces of duplicated vectors (+ vertices of
/// degree > 4 for simple_venn). Degenerate families are perturbed first.
std::size_t deficiency(const PolygonFamily& family, SearchTarget target, std::uint64_t perturb_seed = 0);

/// Deterministic for a fixed config. Stops at deficiency 0, after
/// max_iterations, or when `cancel` becomes true.
SearchResult anneal(const SearchConfig& config, const ProgressCallback& progress = {},
                    const std::atomic<bool>* cancel = nullptr);

/// Random strictly convex k-gon offset from the origin, on a 1/1000 grid.
ConvexPolygon random_generator(std::size_t k, std::uint64_t seed);

}  // namespace vennk
