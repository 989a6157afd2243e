#include "qbch/cyclic_code.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qbch/errors.hpp"

namespace qbch {

DefiningSet DefiningSet::from_cosets(std::int64_t q, std::int64_t n, std::span<const Residue> reps) {
  DefiningSet z{.q = q, .n = n, .residues = {}, .coset_reps = {}};
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  for (Residue s : reps) {
    const Coset c = coset_of(s, q, n);
    for (Residue e : c.elems) {
      if (taken[static_cast<std::size_t>(e)]) {
        throw DomainError("cosets overlap: C_" + std::to_string(s) + " shares residue " + std::to_string(e));
      }
      taken[static_cast<std::size_t>(e)] = true;
    }
    z.coset_reps.push_back(c.rep);
  }
  for (Residue r = 0; r < n; ++r) {
    if (taken[static_cast<std::size_t>(r)]) z.residues.push_back(r);
  }
  std::sort(z.coset_reps.begin(), z.coset_reps.end());
  return z;
}

DefiningSet DefiningSet::from_residues(std::int64_t q, std::int64_t n, std::span<const Residue> residues) {
  std::vector<Residue> sorted;
  for (Residue r : residues) sorted.push_back(mod(r, n));
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Residue> reps;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Residue r : sorted) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    const Coset c = coset_of(r, q, n);
    for (Residue e : c.elems) {
      if (!std::binary_search(sorted.begin(), sorted.end(), e)) {
        throw DomainError("residue set is not a union of cosets: " + std::to_string(r) + " is present but " +
                          std::to_string(e) + " is not");
      }
      seen[static_cast<std::size_t>(e)] = true;
    }
    reps.push_back(c.rep);
  }
  return DefiningSet{.q = q, .n = n, .residues = std::move(sorted), .coset_reps = std::move(reps)};
}

bool DefiningSet::contains(Residue r) const { return std::binary_search(residues.begin(), residues.end(), r); }

bool DefiningSet::is_subset_of(const DefiningSet& other) const {
  return std::includes(other.residues.begin(), other.residues.end(), residues.begin(), residues.end());
}

DesignedDistance bch_designed_distance(const DefiningSet& z) {
  const std::int64_t n = z.n;
  if (static_cast<std::int64_t>(z.size()) == n) throw ZeroCodeError("defining set is all of Z_n: zero code");
  DesignedDistance best{.delta = 1, .start = 0};
  if (z.residues.empty()) return best;
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (Residue r : z.residues) in[static_cast<std::size_t>(r)] = true;
  // Z != Z_n, so every run has a start b with b - 1 outside Z.
  for (Residue b = 0; b < n; ++b) {
    if (!in[static_cast<std::size_t>(b)] || in[static_cast<std::size_t>(mod(b - 1, n))]) continue;
    int len = 0;
    while (in[static_cast<std::size_t>(mod(b + len, n))]) ++len;
    if (len + 1 > best.delta) best = {.delta = len + 1, .start = b};
  }
  return best;
}

DefiningSet dual_defining_set(const DefiningSet& z) {
  const auto neg = negate_set(z.residues, z.n);
  std::vector<Residue> complement;
  for (Residue r = 0; r < z.n; ++r) {
    if (!std::binary_search(neg.begin(), neg.end(), r)) complement.push_back(r);
  }
  return DefiningSet::from_residues(z.q, z.n, complement);
}

namespace {

bool disjoint_sorted(const std::vector<Residue>& a, const std::vector<Residue>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

}  // namespace

bool is_euclidean_dual_containing(const DefiningSet& z) {
  return disjoint_sorted(z.residues, negate_set(z.residues, z.n));
}

bool is_hermitian_dual_containing(const DefiningSet& z, std::int64_t q) {
  if (q < 2 || q * q != z.q) {
    throw DomainError("Hermitian dual needs a code over F_{q^2}; code alphabet " + std::to_string(z.q) +
                      " is not " + std::to_string(q) + "^2");
  }
  return disjoint_sorted(z.residues, scale_set(z.residues, -q, z.n));
}

std::shared_ptr<const FieldCtx> splitting_field(std::int64_t q, std::int64_t n) {
  const auto pp = as_prime_power(q);
  if (!pp) throw DomainError("alphabet size " + std::to_string(q) + " is not a prime power");
  const std::int64_t m = mult_order(n, q);
  const std::int64_t degree = m * pp->exponent;
  // Reject before building: p^degree could overflow.
  if (degree > 64 || std::pow(static_cast<double>(pp->prime), static_cast<double>(degree)) >
                         static_cast<double>(kFieldOrderBudget)) {
    throw BudgetExceeded("splitting field F_" + std::to_string(q) + "^" + std::to_string(m) + " for n = " +
                         std::to_string(n) + " exceeds the table budget of " +
                         std::to_string(kFieldOrderBudget) + " elements");
  }
  return make_field(pp->prime, static_cast<int>(degree));
}

Poly minimal_polynomial(const std::shared_ptr<const FieldCtx>& field, FieldElem alpha, const Coset& coset,
                        std::int64_t q) {
  if (alpha.is_zero() || field->element_order(alpha) != coset.n) {
    throw DomainError("alpha is not a primitive " + std::to_string(coset.n) + "-th root of unity");
  }
  Poly m = Poly::constant(field, q, field->one());
  for (Residue i : coset.elems) {
    m = m * Poly(field, q, {field->neg(field->pow(alpha, i)), field->one()});
  }
  if (!m.coefficients_in(q)) {
    throw std::logic_error("minimal polynomial of C_" + std::to_string(coset.rep) + " has a coefficient outside F_" +
                           std::to_string(q));
  }
  return m;
}

CyclicCode build_code(const DefiningSet& z) {
  auto field = splitting_field(z.q, z.n);
  const FieldElem alpha = field->nth_root_of_unity(z.n);
  Poly g = Poly::constant(field, z.q, field->one());
  for (Residue rep : z.coset_reps) g = g * minimal_polynomial(field, alpha, coset_of(rep, z.q, z.n), z.q);
  if (g.degree() != static_cast<int>(z.size())) throw std::logic_error("deg g != |Z|");
  DesignedDistance dd{.delta = static_cast<int>(z.n) + 1, .start = 0};
  if (static_cast<std::int64_t>(z.size()) != z.n) dd = bch_designed_distance(z);
  return CyclicCode(z, std::move(g), alpha, dd.delta, dd.start);
}

CyclicCode build_code(std::int64_t q, std::int64_t n, std::span<const Residue> reps) {
  return build_code(DefiningSet::from_cosets(q, n, reps));
}

bool code_contains(const CyclicCode& c1, const CyclicCode& c2) {
  if (c1.n() != c2.n() || c1.q() != c2.q()) throw DomainError("codes differ in length or alphabet");
  const bool by_division = (c2.generator() % c1.generator()).is_zero();
  const bool by_sets = c1.defining_set().is_subset_of(c2.defining_set());
  if (by_division != by_sets) throw std::logic_error("generator divisibility disagrees with defining sets");
  return by_division;
}

Poly dual_generator(const CyclicCode& c) {
  const Poly xn = Poly::x_n_minus_one(c.field(), c.q(), c.n());
  const DivMod h = divmod(xn, c.generator());
  if (!h.remainder.is_zero()) throw std::logic_error("generator does not divide x^n - 1");
  return h.quotient.reciprocal().monic();
}

bool contains_word(const CyclicCode& c, const Poly& word) { return (word % c.generator()).is_zero(); }

// C^perp is the cyclic ideal generated by g_perp, so it lies in C exactly
// when g_perp itself does; the shifts x^i g_perp follow.
bool euclidean_dual_contained_by_division(const CyclicCode& c) { return contains_word(c, dual_generator(c)); }

bool hermitian_dual_contained_by_division(const CyclicCode& c, std::int64_t q) {
  if (q < 2 || q * q != c.q()) throw DomainError("Hermitian dual needs a code over F_{q^2}");
  return contains_word(c, dual_generator(c).conjugate(q));
}

}  // namespace qbch
