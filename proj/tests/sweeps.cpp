#include "sweeps.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qbch/cyclic_code.hpp"
#include "qbch/errors.hpp"
#include "qbch/oracle.hpp"
#include "qbch/quantum.hpp"
#include "qbch/search.hpp"
#include "extension_field.hpp"

namespace qbch::sweeps {

void SweepResult::fail(const std::string& what) {
  if (violations++ == 0) first_violation = what;
}

namespace {

std::string tag(std::int64_t q, std::int64_t n) {
  return "q=" + std::to_string(q) + " n=" + std::to_string(n);
}

std::string tag(std::int64_t q, std::int64_t n, const std::vector<Residue>& reps) {
  std::string s = tag(q, n) + " reps={";
  for (std::size_t i = 0; i < reps.size(); ++i) s += (i ? "," : "") + std::to_string(reps[i]);
  return s + "}";
}

// Calls f(reps) for every subset of the coset representatives.
template <class F>
void each_union(const CosetPartition& part, F&& f) {
  const std::size_t count = part.cosets.size();
  std::vector<Residue> reps;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    reps.clear();
    for (std::size_t i = 0; i < count; ++i)
      if (mask >> i & 1) reps.push_back(part.cosets[i].rep);
    f(reps);
  }
}

constexpr std::size_t kMaxCosetsForUnions = 18;

}  // namespace

SweepResult coset_partition(std::int64_t n_max) {
  SweepResult res;
  for (std::int64_t q : {3, 4, 5, 7, 8, 9}) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
      if (std::gcd(q, n) != 1) continue;
      ++res.cases;
      const CosetPartition part = partition(q, n);
      std::vector<int> seen(static_cast<std::size_t>(n), 0);
      Residue last_rep = -1;
      for (const Coset& c : part.cosets) {
        if (c.rep <= last_rep) res.fail(tag(q, n) + ": representatives not increasing");
        last_rep = c.rep;
        if (c.elems.empty() || c.elems.front() != c.rep) res.fail(tag(q, n) + ": rep is not the minimum");
        if (part.m % static_cast<std::int64_t>(c.size()) != 0) res.fail(tag(q, n) + ": size does not divide m");
        for (Residue e : c.elems) {
          ++seen[static_cast<std::size_t>(e)];
          if (!c.contains(mod(e * q, n))) res.fail(tag(q, n) + ": coset not closed under *q");
          if (!(part.containing(e) == c)) res.fail(tag(q, n) + ": containing() disagrees");
        }
      }
      for (int s : seen)
        if (s != 1) {
          res.fail(tag(q, n) + ": cosets do not partition Z_n");
          break;
        }
    }
  }
  return res;
}

SweepResult minimal_polynomial_product(std::int64_t n_max) {
  SweepResult res;
  for (std::int64_t q : {3, 4, 5, 7, 8, 9}) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
      if (std::gcd(q, n) != 1) continue;
      std::shared_ptr<const FieldCtx> field;
      try {
        field = splitting_field(q, n);
      } catch (const BudgetExceeded&) {
        ++res.skipped;
        continue;
      }
      ++res.cases;
      const FieldElem alpha = field->nth_root_of_unity(n);
      const CosetPartition part = partition(q, n);
      Poly product = Poly::constant(field, q, field->one());
      for (const Coset& c : part.cosets) {
        Poly m = minimal_polynomial(field, alpha, c, q);
        if (!m.coefficients_in(q) || m.degree() != static_cast<int>(c.size()))
          res.fail(tag(q, n) + ": bad minimal polynomial for C_" + std::to_string(c.rep));
        product = product * m;
      }
      if (!(product == Poly::x_n_minus_one(field, q, n))) res.fail(tag(q, n) + ": product is not x^n - 1");
    }
  }
  return res;
}

namespace {

// Prime-field coefficients as integers, comparable across field representations.
std::vector<std::int64_t> prime_coefficients(const Poly& g) {
  std::vector<std::int64_t> out;
  const FieldCtx& f = g.field();
  for (FieldElem c : g.coeffs()) {
    std::int64_t v = 0;
    while (f.from_int(v) != c) ++v;
    out.push_back(v);
  }
  return out;
}

// Predicate vs division for every union of cosets. Past the table budget the
// generator comes from the table-free extension; for n <= cross_check_n it is
// computed both ways and compared.
SweepResult dual_sweep(std::int64_t q, bool hermitian_form, std::int64_t n_max, std::int64_t cross_check_n,
                       SweepResult res) {
  const std::int64_t big_q = hermitian_form ? q * q : q;
  const std::int64_t power = hermitian_form ? q : 1;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    if (std::gcd(q, n) != 1) continue;
    const CosetPartition part = partition(big_q, n);
    if (part.cosets.size() > kMaxCosetsForUnions) {
      ++res.skipped;
      continue;
    }
    bool in_budget = true;
    try {
      splitting_field(big_q, n);
    } catch (const BudgetExceeded&) {
      in_budget = false;
    }
    std::optional<testing::Extension> ext;
    if (!in_budget || n <= cross_check_n) ext.emplace(big_q, n);
    // The two roots of unity differ by a unit u: generator(Z) there is generator(uZ) here.
    std::int64_t unit = 0;
    if (in_budget && ext && is_prime(big_q)) {
      const DefiningSet first = DefiningSet::from_cosets(big_q, n, std::vector<Residue>{1});
      const auto g1 = prime_coefficients(testing::generator_via_extension(*ext, first));
      for (std::int64_t u = 1; u < n && unit == 0; ++u)
        if (std::gcd(u, n) == 1 && prime_coefficients(build_code(big_q, n, std::vector<Residue>{u}).generator()) == g1)
          unit = u;
      if (unit == 0) res.fail(tag(big_q, n) + ": no unit matches the table-free root of unity");
    }
    each_union(part, [&](const std::vector<Residue>& reps) {
      ++res.cases;
      const DefiningSet z = DefiningSet::from_cosets(big_q, n, reps);
      const bool predicate = hermitian_form ? is_hermitian_dual_containing(z, q) : is_euclidean_dual_containing(z);
      if (in_budget) {
        const CyclicCode c = build_code(z);
        const bool division = hermitian_form ? hermitian_dual_contained_by_division(c, q)
                                             : euclidean_dual_contained_by_division(c);
        if (predicate != division) res.fail(tag(big_q, n, reps) + ": predicate disagrees with division");
        if (!hermitian_form) {
          const DefiningSet dual = dual_defining_set(z);
          if (static_cast<std::int64_t>(dual.size()) != n - static_cast<std::int64_t>(z.size()) ||
              !(dual_defining_set(dual) == z))
            res.fail(tag(big_q, n, reps) + ": dual defining set is not an involution");
          if (!(build_code(dual).generator() == dual_generator(c)))
            res.fail(tag(big_q, n, reps) + ": dual generator disagrees with the dual defining set");
        }
        if (ext) {
          const Poly g = testing::generator_via_extension(*ext, z);
          if (testing::dual_contained(g, n, power) != division)
            res.fail(tag(big_q, n, reps) + ": table-free division disagrees");
          if (unit != 0) {
            const auto scaled = DefiningSet::from_residues(big_q, n, scale_set(z.residues, unit, n));
            if (prime_coefficients(g) != prime_coefficients(build_code(scaled).generator()))
              res.fail(tag(big_q, n, reps) + ": table-free generator differs");
          }
        }
      } else {
        const Poly g = testing::generator_via_extension(*ext, z);
        if (predicate != testing::dual_contained(g, n, power))
          res.fail(tag(big_q, n, reps) + ": predicate disagrees with table-free division");
      }
    });
  }
  return res;
}

}  // namespace

SweepResult euclidean_dual_containment(std::int64_t n_max) {
  SweepResult res;
  for (std::int64_t q : {2, 3, 4, 5, 7}) res = dual_sweep(q, false, n_max, 16, res);
  return res;
}

SweepResult hermitian_dual_containment(std::int64_t n_max) {
  SweepResult res;
  for (std::int64_t q : {2, 3, 4, 5, 7}) res = dual_sweep(q, true, n_max, 10, res);
  return res;
}

SweepResult singleton_lemma(std::int64_t n_max) {
  SweepResult res;
  for (std::int64_t q : {4, 5, 7, 8, 9}) {
    for (std::int64_t n = q - 1; n <= n_max; n += q - 1) {
      if (std::gcd(q, n) != 1) continue;
      ++res.cases;
      const std::int64_t r = n / (q - 1);
      std::set<Residue> expected;
      for (std::int64_t l = 0; l <= q - 2; ++l) expected.insert(l * r);
      std::set<Residue> found;
      for (const Coset& c : partition(q, n).cosets)
        if (c.size() == 1) found.insert(c.rep);
      if (found != expected) res.fail(tag(q, n) + ": singleton cosets are not the multiples of r");
    }
  }
  return res;
}

SweepResult consecutive_lemma(std::int64_t n_max) {
  SweepResult res;
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (std::int64_t n = 2; n <= n_max; ++n) {
      if (!is_prime(n) || std::gcd(q, n) != 1) continue;
      ++res.cases;
      if (std::gcd(q - 1, n) != 1) {
        try {
          find_consecutive_coset(q, n);
          res.fail(tag(q, n) + ": expected a hypothesis failure");
        } catch (const HypothesisError&) {
        }
        continue;
      }
      const Residue s = find_consecutive_coset(q, n);
      const Coset c = coset_of(s, q, n);
      if (!c.contains(s) || !c.contains(mod(s + 1, n))) res.fail(tag(q, n) + ": coset lacks s or s+1");
      const std::int64_t m = mult_order(n, q);
      for (const Coset& other : partition(q, n).cosets)
        if (other.rep != 0 && static_cast<std::int64_t>(other.size()) != m)
          res.fail(tag(q, n) + ": nonzero coset of size other than m");
    }
  }
  return res;
}

SweepResult oracle_vs_bch() {
  SweepResult res;
  constexpr double kMaxEnumeration = 20000;
  constexpr double kMaxSupportCost = 2e7;
  for (std::int64_t q : {2, 3, 4, 5}) {
    for (std::int64_t n = 2; n <= 15; ++n) {
      if (std::gcd(q, n) != 1) continue;
      const CosetPartition part = partition(q, n);
      each_union(part, [&](const std::vector<Residue>& reps) {
        const CyclicCode c = build_code(q, n, reps);
        if (c.is_zero_code() || std::pow(static_cast<double>(q), static_cast<double>(c.dimension())) > kMaxEnumeration)
          return;
        ++res.cases;
        const WeightReport full = enumerate_min_weight(c);
        if (full.mode != OracleMode::exact || !full.weight) {
          res.fail(tag(q, n, reps) + ": enumeration found no word");
          return;
        }
        const int d = *full.weight;
        if (d < c.designed_distance()) res.fail(tag(q, n, reps) + ": weight below the BCH bound");
        if (d > n - c.dimension() + 1) res.fail(tag(q, n, reps) + ": weight above the Singleton bound");
        if (support_search_cost(c, 1, d) > kMaxSupportCost) return;
        const WeightReport search = min_weight_search(c, d);
        if (search.mode != OracleMode::exact || search.weight != d)
          res.fail(tag(q, n, reps) + ": support search disagrees with enumeration");
      });
    }
  }
  return res;
}

SweepResult dimension_formulas(std::int64_t n_max) {
  SweepResult res;
  SearchSpec spec;
  spec.qs = {3, 4, 5, 7, 8, 9};
  spec.n_min = 4;
  spec.n_max = n_max;
  for (const GeneratorArgs& args : search_points(spec)) {
    try {
      const Construction con = generate(args);
      ++res.cases;
      const QuantumParams& p = con.params;
      if (!p.formula_k || *p.formula_k != p.k) res.fail(args.describe() + ": K differs from the closed form");
      std::int64_t recomputed = -1;
      switch (con.scheme) {
        case Scheme::css:
          recomputed = p.classical.at(0).k - p.classical.at(1).k;
          break;
        case Scheme::steane:
          recomputed = p.classical.at(0).k + p.classical.at(1).k - p.n;
          break;
        case Scheme::hermitian:
          recomputed = 2 * p.classical.at(0).k - p.n;
          break;
      }
      if (recomputed != p.k) res.fail(args.describe() + ": K differs from the classical dimensions");
    } catch (const HypothesisError&) {
      ++res.skipped;
    } catch (const BudgetExceeded&) {
      ++res.skipped;
    } catch (const DomainError&) {
      ++res.skipped;
    } catch (const std::logic_error& e) {
      ++res.cases;
      res.fail(args.describe() + ": " + e.what());
    }
  }
  return res;
}

}  // namespace qbch::sweeps
