#include <set>

#include "doctest.h"
#include "support.hpp"
#include "vennk/classify.hpp"
#include "vennk/transform.hpp"

using namespace vennk;
using testing::fixture;

namespace {

std::set<std::uint64_t> present_signs(const PolygonFamily& family) {
  std::set<std::uint64_t> out;
  for (const auto& f : Arrangement::build(family).faces()) out.insert(f.sign.bits());
  return out;
}

}  // namespace

TEST_CASE("perturb repairs a shared corner") {
  const auto input = fixture("degenerate");
  REQUIRE_THROWS_AS(Arrangement::build(input), DegeneracyError);
  std::vector<Translation> applied;
  const auto out = perturb(input, ratio(1, 100), 3, &applied);
  CHECK_NOTHROW(Arrangement::build(out));
  CHECK_FALSE(applied.empty());
  for (const auto& t : applied) CHECK(t.by.x * t.by.x + t.by.y * t.by.y <= ratio(1, 10000));
}

TEST_CASE("perturb separates overlapping sides") {
  const auto out = perturb(fixture("overlap"), ratio(1, 100), 3);
  const auto arr = Arrangement::build(out);
  CHECK(arr.vertex_count() < 100);
}

TEST_CASE("perturb leaves a general-position family untouched") {
  const auto input = fixture("two_squares");
  std::vector<Translation> applied;
  CHECK(perturb(input, ratio(1, 100), 3, &applied) == input);
  CHECK(applied.empty());
}

TEST_CASE("perturb is deterministic and validates epsilon") {
  const auto input = fixture("degenerate");
  CHECK(perturb(input, ratio(1, 100), 42) == perturb(input, ratio(1, 100), 42));
  CHECK_THROWS_AS(perturb(input, Rat(0), 1), DomainError);
}

TEST_CASE("perturb gives up after its retry budget") {
  try {
    perturb(fixture("degenerate"), ratio(1, 100), 1, nullptr, 0);
    FAIL("expected retries_exhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::retries_exhausted);
  }
}

TEST_CASE("split_to_simple passes a simple input through unchanged") {
  const auto input = fixture("table2");
  const auto [out, report] = split_to_simple(input, ratio(1, 1000), 1);
  CHECK(out == input);
  CHECK(report.steps.empty());
  CHECK(report.faces_before == report.faces_after);
  CHECK(report.histogram_before == report.histogram_after);
  CHECK(report.still_independent_family);
}

TEST_CASE("split_to_simple on the triple-point fixture") {
  const auto input = fixture("triple_point");
  const auto before = present_signs(input);
  const auto [out, report] = split_to_simple(input, ratio(1, 100), 5);
  CHECK(report.input_was_venn);
  CHECK(report.faces_after > report.faces_before);
  CHECK(report.histogram_after.size() == 1);
  CHECK(report.histogram_after.count(4) == 1);
  CHECK(report.still_independent_family);

  // Rebuilding the output is the oracle for the report.
  const auto arr = Arrangement::build(out);
  CHECK(degree_histogram(arr) == report.histogram_after);
  CHECK(arr.face_count() == report.faces_after);
  const auto after = present_signs(out);
  for (auto s : before) CHECK(after.count(s) == 1);
  // Splitting adds faces but no new sign vectors, so some now repeat.
  const auto r = verify(out);
  CHECK(r.is_independent_family);
  CHECK_FALSE(r.is_venn);
  CHECK(r.is_simple);
}

TEST_CASE("every split step adds faces and reduces a high-degree vertex") {
  for (const char* name : {"triple_point", "figure2"}) {
    const auto [out, report] = split_to_simple(fixture(name), ratio(1, 100), 9);
    REQUIRE_FALSE(report.steps.empty());
    std::size_t faces = report.faces_before;
    for (const auto& step : report.steps) {
      CHECK(step.faces_before == faces);
      CHECK(step.faces_after > step.faces_before);
      CHECK(step.vertex_degree > 4);
      faces = step.faces_after;
    }
    CHECK(faces == report.faces_after);
  }
}

TEST_CASE("split_to_simple on the degree-eight fixture") {
  const auto [out, report] = split_to_simple(fixture("figure2"), ratio(1, 100), 2);
  CHECK(report.histogram_before.at(8) == 1);
  CHECK(report.histogram_after == std::map<std::size_t, std::size_t>{{4, report.histogram_before.at(4) + 6}});
  CHECK(report.faces_after == report.faces_before + 3);
}

TEST_CASE("split_to_simple is deterministic") {
  const auto input = fixture("figure2");
  const auto a = split_to_simple(input, ratio(1, 100), 77);
  const auto b = split_to_simple(input, ratio(1, 100), 77);
  CHECK(a.first == b.first);
  REQUIRE(a.second.steps.size() == b.second.steps.size());
  for (std::size_t i = 0; i < a.second.steps.size(); ++i) {
    CHECK(a.second.steps[i].translation == b.second.steps[i].translation);
  }
}

TEST_CASE("split_to_simple validates epsilon") {
  CHECK_THROWS_AS(split_to_simple(fixture("triple_point"), Rat(-1), 1), DomainError);
}

TEST_CASE("degree_excess counts extra curve pairs at vertices") {
  CHECK(degree_excess(Arrangement::build(fixture("table2"))) == 0);
  // A degree-8 vertex carries 6 curve pairs where a simple vertex carries 1.
  CHECK(degree_excess(Arrangement::build(fixture("figure2"))) == 5);
}
