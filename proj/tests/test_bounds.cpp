#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "vennk/bounds.hpp"
#include "vennk/report.hpp"

using namespace vennk;

namespace {

// Integer ceiling of a / b for positive b.
mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class pow2(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

TEST_CASE("lemma1_max_vertices") {
  CHECK(lemma1_max_vertices(7, 3) == 126);
  CHECK(lemma1_max_vertices(2, 3) == 6);
  CHECK(lemma1_max_vertices(7, 4) == 168);
  CHECK_THROWS_AS(lemma1_max_vertices(1, 3), DomainError);
  CHECK_THROWS_AS(lemma1_max_vertices(3, 2), DomainError);
}

TEST_CASE("lemma2_min_k") {
  CHECK(lemma2_min_k(7) == 3);
  CHECK(lemma2_min_k(6) == 3);
  CHECK(lemma2_min_k(3) == 1);
  CHECK_THROWS_AS(lemma2_min_k(2), DomainError);
}

TEST_CASE("theorem_min_k") {
  CHECK(theorem_min_k(7) == 4);
  CHECK(theorem_min_k(10) == 13);
  CHECK(theorem_min_k(14) == 98);
  CHECK_THROWS_AS(theorem_min_k(2), DomainError);
  CHECK_THROWS_AS(theorem_min_k(65), DomainError);
}

TEST_CASE("theorem_vertex_cap") {
  CHECK(theorem_vertex_cap(7, 4) == 147);
  CHECK(theorem_vertex_cap(7, 3) == 112);
  CHECK(theorem_vertex_cap(3, 3) == 12);
  CHECK_THROWS_AS(theorem_vertex_cap(2, 3), DomainError);
  CHECK(vertex_cap_formula(2, 4) == 2);
}

TEST_CASE("simple_venn_vertices") {
  CHECK(simple_venn_vertices(7) == 126);
  CHECK(simple_venn_vertices(64) == pow2(64) - 2);
}

TEST_CASE("bounds_table reproduces both rows of the golden table") {
  const auto rows = bounds_table(3, 14);
  REQUIRE(rows.size() == 12);
  const long lower[] = {1, 2, 2, 3, 4, 6, 8, 13, 21, 35, 58, 98};
  const long upper[] = {1, 2, 2, 3, 4, 64, 128, 256, 512, 1024, 2048, 4096};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == static_cast<long>(i) + 3);
    CHECK(rows[i].theorem_min_k == lower[i]);
    CHECK(rows[i].upper_k == upper[i]);
  }
  CHECK_THROWS_AS(bounds_table(2, 5), DomainError);
  CHECK_THROWS_AS(bounds_table(6, 5), DomainError);
  CHECK_THROWS_AS(bounds_table(3, 65), DomainError);
}

TEST_CASE("bounds_text matches the golden table") {
  std::ifstream in(testing::data_path("table1.golden"));
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(bounds_text(bounds_table(3, 14)) == golden.str());
}

TEST_CASE("closed forms against direct big-integer evaluation") {
  for (long n = 3; n <= 64; ++n) {
    const mpz_class pairs = mpz_class(n) * (n - 1) / 2;
    CHECK(lemma2_min_k(n) == ceil_div(pow2(n - 1) - 1, pairs));
    CHECK(theorem_min_k(n) == ceil_div(pow2(n) - 2 - n, mpz_class(n) * (n - 2)));
    CHECK(known_upper_k(n) == (n <= 7 ? theorem_min_k(n) : pow2(n - 2)));
    for (long k = 3; k <= 40; ++k) {
      CHECK(lemma1_max_vertices(n, k) == pairs * 2 * k);
      CHECK(theorem_vertex_cap(n, k) == pairs * 2 * k - n * (k - 1));
    }
  }
}

TEST_CASE("invariant grid") {
  for (long n = 3; n <= 64; ++n) {
    if (n >= 4) CHECK(theorem_min_k(n) >= lemma2_min_k(n));
    CHECK(theorem_min_k(n) > 0);
    CHECK(known_upper_k(n) >= theorem_min_k(n));
    for (long k = 3; k <= 64; ++k) CHECK(theorem_vertex_cap(n, k) < lemma1_max_vertices(n, k));
  }
}
