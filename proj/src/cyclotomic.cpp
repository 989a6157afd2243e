#include "qbch/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qbch/errors.hpp"

namespace qbch {

namespace {

void require_coprime(std::int64_t q, std::int64_t n) {
  if (n < 1) throw DomainError("modulus must be positive");
  if (std::gcd(q, n) != 1) {
    throw DomainError("gcd(q, n) = gcd(" + std::to_string(q) + ", " + std::to_string(n) +
                      ") = " + std::to_string(std::gcd(q, n)) + " is not 1");
  }
}

std::vector<Residue> sorted_unique(std::vector<Residue> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::int64_t mult_order(std::int64_t n, std::int64_t q) {
  require_coprime(q, n);
  if (n == 1) return 1;
  std::int64_t m = 1;
  std::int64_t x = mod(q, n);
  while (x != 1) {
    x = x * q % n;
    ++m;
  }
  return m;
}

bool Coset::contains(Residue r) const { return std::binary_search(elems.begin(), elems.end(), r); }

Coset coset_of(Residue s, std::int64_t q, std::int64_t n) {
  require_coprime(q, n);
  Coset c{.rep = 0, .elems = {}, .q = q, .n = n};
  const Residue start = mod(s, n);
  Residue x = start;
  do {
    c.elems.push_back(x);
    x = x * mod(q, n) % n;
  } while (x != start);
  std::sort(c.elems.begin(), c.elems.end());
  c.rep = c.elems.front();
  return c;
}

const Coset& CosetPartition::containing(Residue r) const { return cosets[index_[static_cast<std::size_t>(mod(r, n))]]; }

CosetPartition partition(std::int64_t q, std::int64_t n) {
  CosetPartition part;
  part.q = q;
  part.n = n;
  part.m = mult_order(n, q);
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  part.index_.assign(static_cast<std::size_t>(n), kUnset);
  for (Residue s = 0; s < n; ++s) {
    if (part.index_[static_cast<std::size_t>(s)] != kUnset) continue;
    Coset c = coset_of(s, q, n);
    for (Residue e : c.elems) part.index_[static_cast<std::size_t>(e)] = part.cosets.size();
    part.cosets.push_back(std::move(c));
  }
  return part;
}

std::vector<Residue> solve_linear_congruence(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (n < 1) throw DomainError("modulus must be positive");
  a = mod(a, n);
  b = mod(b, n);
  const std::int64_t d = std::gcd(a, n);  // gcd(0, n) = n
  if (b % d != 0) return {};
  const std::int64_t step = n / d;
  // Extended Euclid for the inverse of a/d modulo n/d.
  std::int64_t r0 = a / d, r1 = step, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t t = r0 / r1;
    r0 -= t * r1;
    std::swap(r0, r1);
    s0 -= t * s1;
    std::swap(s0, s1);
  }
  const std::int64_t x0 = step == 1 ? 0 : mod(mod(s0, step) * (b / d), step);
  std::vector<Residue> out;
  out.reserve(static_cast<std::size_t>(d));
  for (std::int64_t t = 0; t < d; ++t) out.push_back(x0 + t * step);
  return out;
}

Residue find_consecutive_coset(std::int64_t q, std::int64_t n) {
  require_coprime(q, n);
  if (std::gcd(q - 1, n) != 1) {
    throw HypothesisError("no guaranteed consecutive coset: gcd(q - 1, n) = " +
                          std::to_string(std::gcd(q - 1, n)) + " > 1");
  }
  const auto sols = solve_linear_congruence(q - 1, 1, n);
  const Residue s = sols.front();
  if (mod(s * q, n) != mod(s + 1, n)) throw std::logic_error("consecutive coset check failed");
  return s;
}

std::vector<Residue> negate_set(std::span<const Residue> set, std::int64_t n) {
  return scale_set(set, -1, n);
}

std::vector<Residue> scale_set(std::span<const Residue> set, std::int64_t c, std::int64_t n) {
  std::vector<Residue> out;
  out.reserve(set.size());
  for (Residue z : set) out.push_back(mod(mod(c, n) * mod(z, n), n));
  return sorted_unique(std::move(out));
}

}  // namespace qbch
