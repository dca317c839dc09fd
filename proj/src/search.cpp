#include "vennk/search.hpp"

#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "vennk/classify.hpp"
#include "vennk/transform.hpp"

namespace vennk {

const char* to_string(SearchTarget t) { return t == SearchTarget::venn ? "venn" : "simple_venn"; }

SearchTarget parse_target(const std::string& s) {
  if (s == "venn") return SearchTarget::venn;
  if (s == "simple_venn") return SearchTarget::simple_venn;
  throw ParseError("unknown search target '" + s + "' (expected venn or simple_venn)");
}

void SearchConfig::validate() const {
  if (n < 3 || n > 12) throw DomainError("search n must be in [3, 12]");
  if (k < 3) throw DomainError("search k must be at least 3");
  if (digits < 1 || digits > 200) throw DomainError("digits must be in [1, 200]");
  if (max_iterations < 1) throw DomainError("max_iterations must be at least 1");
  if (jitter_grid <= 0 || jitter_initial <= 0 || jitter_final <= 0) {
    throw DomainError("jitter magnitudes must be positive");
  }
  if (!(temperature_initial > 0) || !(temperature_final > 0)) throw DomainError("temperatures must be positive");
  if (walkers < 1 || walkers > 64) throw DomainError("walkers must be in [1, 64]");
  if (initial && initial->size() != k) throw DomainError("initial generator must have k corners");
}

PolygonFamily symmetric_family(const ConvexPolygon& generator, std::size_t n, int digits) {
  if (auto v = validate_convex(generator)) throw DomainError("invalid generator: " + v->message);
  if (n < 1 || n > kMaxCurves) throw DomainError("symmetry order out of range");
  std::vector<ConvexPolygon> copies;
  copies.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ConvexPolygon p = rotate_about_origin(generator, static_cast<int>(i), static_cast<int>(n), digits);
    if (n > 1) p.set_label("C" + std::to_string(i + 1));
    copies.push_back(std::move(p));
  }
  return PolygonFamily(std::move(copies));
}

namespace {

std::size_t score(const Arrangement& arr, SearchTarget target) {
  const RegionCensus c = census(arr);
  std::size_t d = (std::size_t{1} << c.n) - c.faces_by_sign.size();
  for (const auto& [sign, faces] : c.faces_by_sign) d += faces.size() - 1;
  if (target == SearchTarget::simple_venn) {
    for (const auto& v : arr.vertices()) d += v.degree() > 4 ? 1 : 0;
  }
  return d;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Smallest coordinate scale of a family, used to size perturbations.
Rat perturbation_size(const PolygonFamily& family) {
  Rat extent = 0;
  for (const auto& p : family.polygons()) {
    for (const auto& c : p.corners()) extent = std::max(extent, Rat(abs(c.x) + abs(c.y)));
  }
  return (extent > 0 ? extent : Rat(1)) * ratio(1, 1000000000);
}

struct Evaluated {
  ConvexPolygon generator;
  std::size_t deficiency;
};

// Scores the symmetric family of `g`; a degenerate family is repaired by
// translating the generator, which keeps the family symmetric.
std::optional<Evaluated> evaluate(ConvexPolygon g, const SearchConfig& cfg, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const PolygonFamily family = symmetric_family(g, cfg.n, cfg.digits);
    try {
      const Arrangement arr = Arrangement::build(family);
      return Evaluated{std::move(g), score(arr, cfg.target)};
    } catch (const DegeneracyError&) {
      g = g.translated(random_offset(cfg.jitter_grid, rng));
    }
  }
  return std::nullopt;
}

struct WalkerOutcome {
  SearchState best;
  long iterations = 0;
  bool cancelled = false;
  std::vector<std::pair<long, std::size_t>> improvements;
};

WalkerOutcome run_walker(const SearchConfig& cfg, std::size_t walker, const ConvexPolygon& start,
                         std::atomic<long>& solved_at, const ProgressCallback& progress, std::mutex& progress_mutex,
                         const std::atomic<bool>* cancel) {
  std::mt19937_64 rng(mix(cfg.seed + walker * 0x5851F42D4C957F2DULL));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto first = evaluate(start, cfg, rng);
  if (!first) throw Error(ErrorCode::degenerate, "initial generator stays degenerate after perturbation");
  ConvexPolygon current = first->generator;
  std::size_t current_def = first->deficiency;
  WalkerOutcome out{SearchState{current, current_def, 0}, 0, false, {{0, current_def}}};

  auto report = [&](long iteration) {
    if (!progress) return;
    std::lock_guard lock(progress_mutex);
    progress(SearchProgress{walker, iteration, current_def, out.best.deficiency, out.best.generator});
  };

  if (current_def == 0) {
    long expected = solved_at.load();
    while (0 < expected && !solved_at.compare_exchange_weak(expected, 0)) {
    }
    report(0);
    return out;
  }

  const double j0 = to_double(cfg.jitter_initial);
  const double j1 = to_double(cfg.jitter_final);
  const double grid = to_double(cfg.jitter_grid);
  const double t0 = cfg.temperature_initial;
  const double t1 = cfg.temperature_final;
  const double span = static_cast<double>(std::max<long>(1, cfg.max_iterations - 1));

  for (long it = 1; it <= cfg.max_iterations; ++it) {
    if (it > solved_at.load()) break;
    if (cancel && cancel->load()) {
      out.cancelled = true;
      break;
    }
    out.iterations = it;
    const double frac = static_cast<double>(it - 1) / span;
    const double magnitude = j0 * std::pow(j1 / j0, frac);
    const double temperature = t0 * std::pow(t1 / t0, frac);
    const long units = std::max<long>(1, static_cast<long>(magnitude / grid));

    std::uniform_int_distribution<long> pick(-units, units);
    long a = 0;
    long b = 0;
    do {
      a = pick(rng);
      b = pick(rng);
    } while ((a == 0 && b == 0) || a * a + b * b > units * units);
    const std::size_t corner = rng() % current.size();

    std::vector<Point> moved = current.corners();
    moved[corner] = moved[corner] + Point{cfg.jitter_grid * a, cfg.jitter_grid * b};
    if (validate_convex(std::span<const Point>(moved))) continue;

    auto candidate = evaluate(ConvexPolygon(std::move(moved), current.label()), cfg, rng);
    if (!candidate) continue;
    const long delta = static_cast<long>(candidate->deficiency) - static_cast<long>(current_def);
    if (delta <= 0 || unit(rng) < std::exp(-static_cast<double>(delta) / temperature)) {
      current = std::move(candidate->generator);
      current_def = candidate->deficiency;
      if (current_def < out.best.deficiency) {
        out.best = SearchState{current, current_def, it};
        out.improvements.emplace_back(it, current_def);
      }
    }
    if (out.best.deficiency == 0) {
      long expected = solved_at.load();
      while (it < expected && !solved_at.compare_exchange_weak(expected, it)) {
      }
      report(it);
      break;
    }
    if (cfg.progress_interval > 0 && it % cfg.progress_interval == 0) report(it);
  }
  return out;
}

}  // namespace

std::size_t deficiency(const PolygonFamily& family, SearchTarget target, std::uint64_t perturb_seed) {
  try {
    return score(Arrangement::build(family), target);
  } catch (const DegeneracyError&) {
    const PolygonFamily repaired = perturb(family, perturbation_size(family), perturb_seed);
    return score(Arrangement::build(repaired), target);
  }
}

ConvexPolygon random_generator(std::size_t k, std::uint64_t seed) {
  if (k < 3) throw DomainError("k must be at least 3");
  std::mt19937_64 rng(mix(seed));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double pi = std::acos(-1.0);
  for (;;) {
    const double cx = 0.15 + 0.3 * u(rng);
    const double cy = -0.15 + 0.3 * u(rng);
    const double phase = 2 * pi * u(rng);
    std::vector<Point> corners;
    for (std::size_t i = 0; i < k; ++i) {
      const double angle = phase + 2 * pi * (static_cast<double>(i) + 0.3 * (u(rng) - 0.5)) / static_cast<double>(k);
      const double r = 0.45 + 0.25 * u(rng);
      corners.push_back({ratio(std::lround(1000 * (cx + r * std::cos(angle))), 1000),
                         ratio(std::lround(1000 * (cy + r * std::sin(angle))), 1000)});
    }
    if (!validate_convex(std::span<const Point>(corners))) return ConvexPolygon(std::move(corners), "C1");
  }
}

SearchResult anneal(const SearchConfig& config, const ProgressCallback& progress, const std::atomic<bool>* cancel) {
  config.validate();
  const ConvexPolygon start = config.initial ? *config.initial : random_generator(config.k, config.seed);

  std::atomic<long> solved_at{std::numeric_limits<long>::max()};
  std::mutex progress_mutex;
  std::vector<std::optional<WalkerOutcome>> outcomes(config.walkers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < config.walkers; ++w) {
      threads.emplace_back([&, w] {
        try {
          outcomes[w] = run_walker(config, w, start, solved_at, progress, progress_mutex, cancel);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  // Earliest solution wins; otherwise lowest deficiency; ties go to the lower walker.
  std::size_t winner = 0;
  auto key = [&](std::size_t w) {
    const auto& b = outcomes[w]->best;
    return std::make_tuple(b.deficiency, b.deficiency == 0 ? b.iteration : 0L, w);
  };
  for (std::size_t w = 1; w < config.walkers; ++w) {
    if (key(w) < key(winner)) winner = w;
  }
  auto& o = *outcomes[winner];
  SearchResult result{std::move(o.best), winner, o.iterations, false, std::move(o.improvements)};
  for (const auto& oc : outcomes) result.cancelled = result.cancelled || oc->cancelled;
  return result;
}

}  // namespace vennk
