#include "vennk/bounds.hpp"

#include <string>

#include "vennk/error.hpp"

namespace vennk {

namespace {

void require_n(long n, long lowest) {
  if (n < lowest || n > kMaxBoundsN) {
    throw DomainError("n must be in [" + std::to_string(lowest) + ", " + std::to_string(kMaxBoundsN) + "], got " +
                      std::to_string(n));
  }
}

void require_k(long k) {
  if (k < 3) throw DomainError("k must be at least 3, got " + std::to_string(k));
}

mpz_class pow2(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

mpz_class pairs(long n) { return mpz_class(n) * (n - 1) / 2; }

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

mpz_class lemma1_max_vertices(long n, long k) {
  require_n(n, 2);
  require_k(k);
  return pairs(n) * 2 * k;
}

mpz_class lemma2_min_k(long n) {
  require_n(n, 3);
  return ceil_div(pow2(n - 1) - 1, pairs(n));
}

mpz_class theorem_min_k(long n) {
  require_n(n, 3);
  return ceil_div(pow2(n) - 2 - n, mpz_class(n) * (n - 2));
}

mpz_class theorem_vertex_cap(long n, long k) {
  require_n(n, 3);
  require_k(k);
  return 2 * mpz_class(k) * pairs(n) - mpz_class(n) * (k - 1);
}

long vertex_cap_formula(std::size_t n, std::size_t k) {
  const long ln = static_cast<long>(n);
  const long lk = static_cast<long>(k);
  return 2 * lk * (ln * (ln - 1) / 2) - ln * (lk - 1);
}

mpz_class simple_venn_vertices(long n) {
  require_n(n, 1);
  return pow2(n) - 2;
}

mpz_class known_upper_k(long n) {
  require_n(n, 3);
  return n <= 7 ? theorem_min_k(n) : pow2(n - 2);
}

std::vector<BoundsRow> bounds_table(long n_min, long n_max) {
  require_n(n_min, 3);
  require_n(n_max, 3);
  if (n_min > n_max) throw DomainError("n_min must not exceed n_max");
  std::vector<BoundsRow> rows;
  for (long n = n_min; n <= n_max; ++n) rows.push_back({n, lemma2_min_k(n), theorem_min_k(n), known_upper_k(n)});
  return rows;
}

}  // namespace vennk
