#pragma once

// Closed-form bounds on vertex counts and on the number of polygon sides
// needed for a simple n-Venn diagram of convex k-gons. All arithmetic is
// exact; 2^n is supported up to n = 64.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace vennk {

inline constexpr long kMaxBoundsN = 64;

/// C(n,2) * 2k. Requires n >= 2, k >= 3.
mpz_class lemma1_max_vertices(long n, long k);

/// ceil((2^(n-1) - 1) / C(n,2)). Requires n >= 3.
mpz_class lemma2_min_k(long n);

/// ceil((2^n - 2 - n) / (n (n - 2))). Requires n >= 3.
mpz_class theorem_min_k(long n);

/// 2k C(n,2) - n(k - 1). Requires n >= 3, k >= 3.
mpz_class theorem_vertex_cap(long n, long k);

/// Unchecked 2k C(n,2) - n(k - 1) for small arguments.
long vertex_cap_formula(std::size_t n, std::size_t k);

/// Number of vertices of any simple n-Venn diagram: 2^n - 2.
mpz_class simple_venn_vertices(long n);

/// Smallest k known to suffice: the lower bound for n <= 7, where matching
/// diagrams exist, and 2^(n-2) from the convex construction for n >= 8.
mpz_class known_upper_k(long n);

struct BoundsRow {
  long n = 0;
  mpz_class lemma2_min_k;
  mpz_class theorem_min_k;
  mpz_class upper_k;

  mpz_class lemma1_max_vertices(long k) const { return vennk::lemma1_max_vertices(n, k); }
  mpz_class theorem_vertex_cap(long k) const { return vennk::theorem_vertex_cap(n, k); }
};

/// Requires 3 <= n_min <= n_max <= 64.
std::vector<BoundsRow> bounds_table(long n_min, long n_max);

}  // namespace vennk
