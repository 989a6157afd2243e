#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qbch {

using Residue = std::int64_t;

// Smallest m >= 1 with q^m = 1 mod n. Throws DomainError if gcd(n, q) != 1.
std::int64_t mult_order(std::int64_t n, std::int64_t q);

// A q-ary cyclotomic coset modulo n: the orbit of a residue under
// multiplication by q. `rep` is the minimum element, `elems` sorted.
struct Coset {
  Residue rep = 0;
  std::vector<Residue> elems;
  std::int64_t q = 0;
  std::int64_t n = 0;

  std::size_t size() const { return elems.size(); }
  bool contains(Residue r) const;

  friend bool operator==(const Coset&, const Coset&) = default;
};

Coset coset_of(Residue s, std::int64_t q, std::int64_t n);

// All q-ary cosets mod n, sorted by representative.
struct CosetPartition {
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;  // ord_n(q)
  std::vector<Coset> cosets;

  const Coset& containing(Residue r) const;

 private:
  friend CosetPartition partition(std::int64_t q, std::int64_t n);
  std::vector<std::size_t> index_;  // residue -> position in cosets
};

CosetPartition partition(std::int64_t q, std::int64_t n);

// All x in [0, n) with a*x = b mod n, ascending; empty iff gcd(a, n) does not divide b.
std::vector<Residue> solve_linear_congruence(std::int64_t a, std::int64_t b, std::int64_t n);

// The solution s of (q - 1)s = 1 mod n; its coset contains s and s + 1.
// Throws DomainError if gcd(q, n) != 1 and HypothesisError if gcd(q - 1, n) != 1.
Residue find_consecutive_coset(std::int64_t q, std::int64_t n);

// {-z mod n}, sorted.
std::vector<Residue> negate_set(std::span<const Residue> set, std::int64_t n);
// {c*z mod n}, sorted and deduplicated.
std::vector<Residue> scale_set(std::span<const Residue> set, std::int64_t c, std::int64_t n);

inline Residue mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace qbch
