#pragma once

// Exhaustive property sweeps shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <string>

namespace qbch::sweeps {

struct SweepResult {
  std::int64_t cases = 0;
  std::int64_t violations = 0;
  std::int64_t skipped = 0;  // instances past a budget
  std::string first_violation;

  bool ok() const { return violations == 0 && cases > 0; }
  void fail(const std::string& what);
};

// Cosets partition Z_n, are closed under *q, have size dividing ord_n(q), and
// start at their minimum. q in {3,4,5,7,8,9}, n <= n_max.
SweepResult coset_partition(std::int64_t n_max = 200);

// Minimal polynomials have coefficients in F_q and multiply to x^n - 1.
SweepResult minimal_polynomial_product(std::int64_t n_max = 200);

// Every union of cosets: the defining-set predicate agrees with division.
// Euclidean for q <= 7 and n <= n_max, also checking the dual defining set.
// Splitting fields past the table budget go through the table-free extension.
SweepResult euclidean_dual_containment(std::int64_t n_max = 40);
// Hermitian over F_{q^2} for q <= 7 and n <= n_max.
SweepResult hermitian_dual_containment(std::int64_t n_max = 20);

// Singleton cosets are exactly the multiples of n/(q-1) when (q-1) | n,
// q in {4,5,7,8,9}, n <= n_max.
SweepResult singleton_lemma(std::int64_t n_max = 500);
// For prime n: find_consecutive_coset gives a coset holding s and s+1, and
// every nonzero coset has size ord_n(q).
SweepResult consecutive_lemma(std::int64_t n_max = 500);

// Exact minimum distance by enumeration is at least the BCH bound and
// matches the support search, over all small cyclic codes.
SweepResult oracle_vs_bch();

// Every generated construction's K equals its family's closed form and the
// count recomputed from the classical dimensions.
SweepResult dimension_formulas(std::int64_t n_max = 150);

}  // namespace qbch::sweeps
