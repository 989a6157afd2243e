#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbch/cyclic_code.hpp"

namespace qbch {

enum class Family { css_I, css_II, steane_III, hermitian_IV, manual };

// Which quantum construction turns the classical codes into a stabilizer code.
enum class Scheme { css, steane, hermitian };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

// Classical parameters [n, k, >= delta]_q of a code used in a construction.
struct ClassicalParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  int delta = 1;
  std::int64_t q = 0;

  std::string to_string() const;
  friend bool operator==(const ClassicalParams&, const ClassicalParams&) = default;
};

// Which hypotheses were re-verified for a record, and what the distance oracle said.
struct Checks {
  std::optional<bool> subset;
  std::optional<bool> euclidean_dc;
  std::optional<bool> hermitian_dc;
  std::optional<std::string> oracle;

  friend bool operator==(const Checks&, const Checks&) = default;
};

// [[n, k, d]]_q together with where it came from.
struct QuantumParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  int d_lower = 1;
  std::optional<int> d_exact;  // only ever set from a distance oracle
  std::int64_t q = 0;
  Family family = Family::manual;
  bool mds = false;

  std::string construction;  // human-readable provenance, e.g. "s=8 r=2"
  std::vector<Residue> defining_set_c1;
  std::vector<Residue> defining_set_c2;
  std::vector<ClassicalParams> classical;
  // Closed-form dimension claimed by the family theorem, when a family produced this.
  std::optional<std::int64_t> formula_k;
  Checks checks;

  std::string to_string() const;
  friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

// The quantum parameters plus the classical codes they were derived from:
// (C1, C2) for CSS, (L, L') for Steane enlargement, C alone for Hermitian.
struct Construction {
  Scheme scheme = Scheme::css;
  QuantumParams params;
  CyclicCode first;
  std::optional<CyclicCode> second;
};

// CSS from C2 strictly inside C1: K = k1 - k2, d >= min(delta(C1), delta(C2^perp)).
Construction css(const CyclicCode& c1, const CyclicCode& c2);

// Steane enlargement of a Euclidean dual-containing L by L' (dim L' >= dim L + 2):
// K = k + k' - n, d >= min(delta(L), ceil((q+1)/q * delta(L'))).
Construction steane_enlarge(const CyclicCode& l, const CyclicCode& enlarged);

// Hermitian construction from a Hermitian dual-containing code over F_{q^2}:
// K = 2k - n, d >= delta(C). The quantum alphabet is q.
Construction hermitian(const CyclicCode& c);

// The paper's families. Every hypothesis (orders, divisibility, coset
// disjointness, dual containment) is recomputed; a failure throws
// HypothesisError naming it. The emitted K is checked against the
// family's closed form.
Construction construct_css_I(std::int64_t q, std::int64_t n, int c);
Construction construct_css_II(std::int64_t q, std::int64_t n, int r, std::optional<Residue> s = std::nullopt);
Construction construct_steane_III(std::int64_t q, std::int64_t n, int r, std::optional<Residue> s = std::nullopt);
Construction construct_steane_nonprime(std::int64_t q, std::int64_t n, int c);
Construction construct_hermitian_IV(std::int64_t q, std::int64_t n, int c);
Construction construct_hermitian_prime(std::int64_t q, std::int64_t n, int r, std::optional<Residue> s = std::nullopt);

// Everything needed to rerun one generator.
//  css-I: c.  css-II: r [s].  steane-III: r [s] (prime n) or c (n = r(q-1)).
//  hermitian-IV: c (n = r(q^2-1)) or r [s] (prime n).
//  manual: scheme + cosets (+ cosets2 for css/steane), alphabet q^2 for hermitian.
struct GeneratorArgs {
  Family family = Family::manual;
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::optional<int> c;
  std::optional<int> r;
  std::optional<Residue> s;
  Scheme scheme = Scheme::hermitian;
  std::vector<Residue> cosets;
  std::vector<Residue> cosets2;

  std::string describe() const;
};

Construction generate(const GeneratorArgs& args);

struct SingletonReport {
  std::int64_t slack = 0;  // n + 2 - K - 2d
  bool mds = false;
};

// Uses d_exact when present. Negative slack with d_exact set is a bug and
// throws std::logic_error.
SingletonReport singleton_check(const QuantumParams& p);

// Stores an oracle-confirmed distance and refreshes the MDS flag.
void record_exact_distance(QuantumParams& p, int d);

}  // namespace qbch
