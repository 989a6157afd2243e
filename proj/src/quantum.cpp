#include "qbch/quantum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qbch/errors.hpp"

namespace qbch {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::css_I: return "css-I";
    case Family::css_II: return "css-II";
    case Family::steane_III: return "steane-III";
    case Family::hermitian_IV: return "hermitian-IV";
    case Family::manual: return "manual";
  }
  return "manual";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::css_I, Family::css_II, Family::steane_III, Family::hermitian_IV, Family::manual}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::css: return "css";
    case Scheme::steane: return "steane";
    case Scheme::hermitian: return "hermitian";
  }
  return "css";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::css, Scheme::steane, Scheme::hermitian}) {
    if (scheme_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string ClassicalParams::to_string() const {
  std::ostringstream os;
  os << '[' << n << ", " << k << ", >=" << delta << "]_" << q;
  return os.str();
}

std::string QuantumParams::to_string() const {
  std::ostringstream os;
  os << "[[" << n << ", " << k << ", ";
  if (d_exact) {
    os << *d_exact;
  } else {
    os << ">=" << d_lower;
  }
  os << "]]_" << q;
  return os.str();
}

namespace {

ClassicalParams classical_of(const CyclicCode& c) {
  return {.n = c.n(), .k = c.dimension(), .delta = c.designed_distance(), .q = c.q()};
}

std::string str(std::int64_t v) { return std::to_string(v); }

[[noreturn]] void fail(const std::string& what) { throw HypothesisError(what); }

std::int64_t exact_sqrt(std::int64_t v) {
  std::int64_t r = 1;
  while (r * r < v) ++r;
  return r * r == v ? r : -1;
}

void require_prime_power(std::int64_t q) {
  if (!as_prime_power(q)) throw DomainError("q = " + str(q) + " is not a prime power");
}

void require_coprime(std::int64_t q, std::int64_t n) {
  if (std::gcd(q, n) != 1) fail("gcd(" + str(q) + ", " + str(n) + ") != 1");
}

// Residues s, s+2, s+3, ..., s+r (just s when r = 1).
std::vector<Residue> stepped_reps(Residue s, int r, std::int64_t n) {
  std::vector<Residue> reps{mod(s, n)};
  for (int i = 2; i <= r; ++i) reps.push_back(mod(s + i, n));
  return reps;
}

std::vector<Residue> range_reps(Residue from, Residue to) {
  std::vector<Residue> reps;
  for (Residue i = from; i <= to; ++i) reps.push_back(i);
  return reps;
}

void require_disjoint(std::int64_t q, std::int64_t n, std::span<const Residue> reps, const std::string& label) {
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  for (Residue s : reps) {
    for (Residue e : coset_of(s, q, n).elems) {
      if (taken[static_cast<std::size_t>(e)]) {
        fail("cosets " + label + " are not mutually disjoint (C_" + str(s) + " repeats residue " + str(e) + ")");
      }
      taken[static_cast<std::size_t>(e)] = true;
    }
  }
}

// Coset representatives of every coset not containing one of `excluded`.
std::vector<Residue> complement_reps(std::int64_t q, std::int64_t n, std::span<const Residue> excluded) {
  const CosetPartition part = partition(q, n);
  std::vector<bool> drop(static_cast<std::size_t>(n), false);
  for (Residue s : excluded) drop[static_cast<std::size_t>(part.containing(s).rep)] = true;
  std::vector<Residue> reps;
  for (const Coset& c : part.cosets) {
    if (!drop[static_cast<std::size_t>(c.rep)]) reps.push_back(c.rep);
  }
  return reps;
}

Residue consecutive_rep(std::int64_t q, std::int64_t n, std::optional<Residue> s) {
  if (!s) return find_consecutive_coset(q, n);
  const Residue v = mod(*s, n);
  if (!coset_of(v, q, n).contains(mod(v + 1, n))) fail("C_" + str(v) + " does not contain " + str(v) + " and " + str(v + 1));
  return v;
}

void check_formula(Construction& out, std::int64_t expected) {
  out.params.formula_k = expected;
  if (out.params.k != expected) {
    throw std::logic_error("dimension mismatch: classical codes give K = " + str(out.params.k) +
                           " but the family formula gives " + str(expected));
  }
}

void check_distance_claim(const Construction& out, int claim) {
  if (out.params.d_lower < claim) {
    throw std::logic_error("designed distance " + str(out.params.d_lower) + " below the family claim " + str(claim));
  }
}

std::string reps_string(std::span<const Residue> reps) {
  std::string s;
  for (Residue r : reps) s += (s.empty() ? "C_" : ",C_") + str(r);
  return s;
}

}  // namespace

Construction css(const CyclicCode& c1, const CyclicCode& c2) {
  if (!code_contains(c1, c2)) fail("C2 is not contained in C1");
  const std::int64_t k = c1.dimension() - c2.dimension();
  if (k == 0) fail("C2 = C1 gives K = 0");
  const DefiningSet dual2 = dual_defining_set(c2.defining_set());
  const int delta_dual2 = bch_designed_distance(dual2).delta;

  QuantumParams p;
  p.n = c1.n();
  p.k = k;
  p.d_lower = std::min(c1.designed_distance(), delta_dual2);
  p.q = c1.q();
  p.family = Family::manual;
  p.defining_set_c1 = c1.defining_set().residues;
  p.defining_set_c2 = c2.defining_set().residues;
  p.classical = {classical_of(c1), classical_of(c2)};
  p.checks.subset = true;
  return Construction{.scheme = Scheme::css, .params = std::move(p), .first = c1, .second = c2};
}

Construction steane_enlarge(const CyclicCode& l, const CyclicCode& enlarged) {
  const bool by_set = is_euclidean_dual_containing(l.defining_set());
  if (by_set != euclidean_dual_contained_by_division(l)) {
    throw std::logic_error("Euclidean dual-containment predicate disagrees with polynomial division");
  }
  if (!by_set) fail("L is not Euclidean dual-containing (Z and -Z intersect)");
  if (!code_contains(enlarged, l)) fail("L' does not contain L");
  if (enlarged.dimension() < l.dimension() + 2) {
    fail("enlargement gap k' - k = " + str(enlarged.dimension() - l.dimension()) + " is below 2");
  }
  const std::int64_t q = l.q();
  const int d_enlarged = static_cast<int>(((q + 1) * enlarged.designed_distance() + q - 1) / q);

  QuantumParams p;
  p.n = l.n();
  p.k = l.dimension() + enlarged.dimension() - l.n();
  p.d_lower = std::min(l.designed_distance(), d_enlarged);
  p.q = q;
  p.family = Family::manual;
  p.defining_set_c1 = l.defining_set().residues;
  p.defining_set_c2 = enlarged.defining_set().residues;
  p.classical = {classical_of(l), classical_of(enlarged)};
  p.checks.subset = true;
  p.checks.euclidean_dc = true;
  return Construction{.scheme = Scheme::steane, .params = std::move(p), .first = l, .second = enlarged};
}

Construction hermitian(const CyclicCode& c) {
  const std::int64_t q = exact_sqrt(c.q());
  if (q < 2) throw DomainError("Hermitian construction needs a code over F_{q^2}; " + str(c.q()) + " is not a square");
  const bool by_set = is_hermitian_dual_containing(c.defining_set(), q);
  if (by_set != hermitian_dual_contained_by_division(c, q)) {
    throw std::logic_error("Hermitian dual-containment predicate disagrees with polynomial division");
  }
  if (!by_set) fail("C is not Hermitian dual-containing (Z and -qZ intersect)");
  const std::int64_t k = 2 * c.dimension() - c.n();
  if (k < 0) fail("2k - n = " + str(k) + " is negative");

  QuantumParams p;
  p.n = c.n();
  p.k = k;
  p.d_lower = c.designed_distance();
  p.q = q;
  p.family = Family::manual;
  p.defining_set_c1 = c.defining_set().residues;
  p.classical = {classical_of(c)};
  p.checks.hermitian_dc = true;
  return Construction{.scheme = Scheme::hermitian, .params = std::move(p), .first = c, .second = std::nullopt};
}

Construction construct_css_I(std::int64_t q, std::int64_t n, int c) {
  require_prime_power(q);
  if (q < 3) fail("q >= 3 required");
  require_coprime(q, n);
  if (n <= q) fail("n > q required");
  if (n % (q - 1) != 0) fail("(q - 1) does not divide n");
  const std::int64_t m = mult_order(n, q);
  if (m != 2) fail("ord_n(q) = " + str(m) + ", not 2");
  const std::int64_t r = n / (q - 1);
  if (c < 2 || c > r) fail("c = " + str(c) + " outside 2 <= c <= r = " + str(r));

  const auto low = range_reps(0, c - 2);
  const auto high = range_reps(r, r + c - 2);
  std::vector<Residue> all = low;
  all.insert(all.end(), high.begin(), high.end());
  require_disjoint(q, n, all, "C_0..C_{c-2}, C_r..C_{r+c-2}");

  const CyclicCode c1 = build_code(q, n, low);
  if (static_cast<std::int64_t>(c1.defining_set().size()) != 2 * (c - 2) + 1) {
    fail("|Z1| = " + str(static_cast<std::int64_t>(c1.defining_set().size())) + " differs from 2(c-2)+1");
  }
  const CyclicCode c2 = build_code(q, n, complement_reps(q, n, high));
  Construction out = css(c1, c2);
  out.params.family = Family::css_I;
  out.params.construction = "C1 = " + reps_string(low) + "; C2 = all cosets except " + reps_string(high);
  check_formula(out, n - 4 * (c - 2) - 2);
  check_distance_claim(out, c);
  return out;
}

Construction construct_css_II(std::int64_t q, std::int64_t n, int r, std::optional<Residue> s) {
  require_prime_power(q);
  if (q < 3) fail("q >= 3 required");
  if (!is_prime(n)) fail("n = " + str(n) + " is not prime");
  if (n <= q) fail("n > q required");
  const std::int64_t m = mult_order(n, q);
  if (m < 2) fail("ord_n(q) < 2");
  if (r < 1) fail("r >= 1 required");
  const Residue s0 = consecutive_rep(q, n, s);

  const auto pos = stepped_reps(s0, r, n);
  const auto neg = negate_set(pos, n);
  std::vector<Residue> neg_ordered;
  for (Residue p : pos) neg_ordered.push_back(mod(-p, n));
  std::vector<Residue> all = pos;
  all.insert(all.end(), neg_ordered.begin(), neg_ordered.end());
  require_disjoint(q, n, all, "C_s, C_{s+2}..C_{s+r}, C_{-s}, C_{-s-2}..C_{-s-r}");

  const CyclicCode c1 = build_code(q, n, pos);
  const CyclicCode c2 = build_code(q, n, complement_reps(q, n, neg_ordered));
  Construction out = css(c1, c2);
  out.params.family = Family::css_II;
  out.params.construction = "s = " + str(s0) + ", r = " + str(r) + "; C1 = " + reps_string(pos) +
                            "; C2 = all cosets except " + reps_string(neg_ordered);
  check_formula(out, n - 2 * m * r);
  check_distance_claim(out, r + 2);
  return out;
}

Construction construct_steane_III(std::int64_t q, std::int64_t n, int r, std::optional<Residue> s) {
  require_prime_power(q);
  if (q < 3) fail("q >= 3 required");
  if (!is_prime(n)) fail("n = " + str(n) + " is not prime");
  if (n <= q) fail("n > q required");
  const std::int64_t m = mult_order(n, q);
  if (m < 2) fail("ord_n(q) < 2");
  if (r < 2) fail("r >= 2 required (L needs C_s and at least C_{s+2})");
  const Residue s0 = consecutive_rep(q, n, s);

  const auto pos = stepped_reps(s0, r, n);
  require_disjoint(q, n, pos, "C_s, C_{s+2}..C_{s+r}");
  const DefiningSet z = DefiningSet::from_cosets(q, n, pos);
  if (!is_euclidean_dual_containing(z)) fail("Z and Z^-1 intersect");

  const std::vector<Residue> smaller(pos.begin(), pos.end() - 1);
  const CyclicCode l = build_code(z);
  const CyclicCode enlarged = build_code(q, n, smaller);
  Construction out = steane_enlarge(l, enlarged);
  out.params.family = Family::steane_III;
  out.params.construction = "s = " + str(s0) + ", r = " + str(r) + "; L = " + reps_string(pos) + "; L' = " +
                            reps_string(smaller);
  check_formula(out, n - m * (2 * r - 1));
  check_distance_claim(out, r + 2);
  return out;
}

Construction construct_steane_nonprime(std::int64_t q, std::int64_t n, int c) {
  require_prime_power(q);
  if (q < 5) fail("q >= 5 required");
  require_coprime(q, n);
  if (n <= q) fail("n > q required");
  if (n % (q - 1) != 0) fail("(q - 1) does not divide n");
  const std::int64_t m = mult_order(n, q);
  if (m != 2) fail("ord_n(q) = " + str(m) + ", not 2");
  const std::int64_t r = n / (q - 1);
  if (r <= 3) fail("r = n/(q-1) = " + str(r) + " must exceed 3");
  if (c < 1 || c > r - 3) fail("c = " + str(c) + " outside 1 <= c <= r - 3 = " + str(r - 3));

  const auto reps = range_reps(r, r + c);
  require_disjoint(q, n, reps, "C_r..C_{r+c}");
  const DefiningSet z = DefiningSet::from_cosets(q, n, reps);
  if (!is_euclidean_dual_containing(z)) fail("Z and Z^-1 intersect");
  const std::vector<Residue> smaller(reps.begin(), reps.end() - 1);
  Construction out = steane_enlarge(build_code(z), build_code(q, n, smaller));
  out.params.family = Family::steane_III;
  out.params.construction = "r = " + str(r) + ", c = " + str(c) + "; L = " + reps_string(reps) + "; L' = " +
                            reps_string(smaller);
  check_formula(out, n - 4 * c);
  check_distance_claim(out, c + 2);
  return out;
}

Construction construct_hermitian_IV(std::int64_t q, std::int64_t n, int c) {
  require_prime_power(q);
  if (q <= 3) fail("q > 3 required");
  const std::int64_t q2 = q * q;
  require_coprime(q2, n);
  if (n <= q2) fail("n > q^2 required");
  if (n % (q2 - 1) != 0) fail("(q^2 - 1) does not divide n");
  const std::int64_t m = mult_order(n, q2);
  if (m != 2) fail("ord_n(q^2) = " + str(m) + ", not 2");
  const std::int64_t r = n / (q2 - 1);
  if (c < 2 || c > r - 2) fail("c = " + str(c) + " outside 2 <= c <= r - 2 = " + str(r - 2));

  const auto reps = range_reps(r, r + c);
  require_disjoint(q2, n, reps, "C_r..C_{r+c}");
  const DefiningSet z = DefiningSet::from_cosets(q2, n, reps);
  if (!is_hermitian_dual_containing(z, q)) fail("Z and Z^-q intersect");
  Construction out = hermitian(build_code(z));
  out.params.family = Family::hermitian_IV;
  out.params.construction = "r = " + str(r) + ", c = " + str(c) + "; C = " + reps_string(reps);
  check_formula(out, n - 4 * c - 2);
  check_distance_claim(out, c + 2);
  return out;
}

Construction construct_hermitian_prime(std::int64_t q, std::int64_t n, int r, std::optional<Residue> s) {
  require_prime_power(q);
  if (q < 3) fail("q >= 3 required");
  const std::int64_t q2 = q * q;
  if (!is_prime(n)) fail("n = " + str(n) + " is not prime");
  require_coprime(q2, n);
  if (std::gcd(q2 - 1, n) != 1) fail("gcd(q^2 - 1, n) != 1");
  const std::int64_t m = mult_order(n, q2);
  if (m < 2) fail("ord_n(q^2) < 2");
  if (r < 1) fail("r >= 1 required");
  const Residue s0 = consecutive_rep(q2, n, s);

  const auto pos = stepped_reps(s0, r, n);
  require_disjoint(q2, n, pos, "C_s, C_{s+2}..C_{s+r}");
  const DefiningSet z = DefiningSet::from_cosets(q2, n, pos);
  if (!is_hermitian_dual_containing(z, q)) fail("Z and Z^-q intersect");
  Construction out = hermitian(build_code(z));
  out.params.family = Family::hermitian_IV;
  out.params.construction = "s = " + str(s0) + ", r = " + str(r) + "; C = " + reps_string(pos);
  check_formula(out, n - 2 * m * r);
  check_distance_claim(out, r + 2);
  return out;
}

std::string GeneratorArgs::describe() const {
  std::ostringstream os;
  os << family_name(family) << " q=" << q << " n=" << n;
  if (c) os << " c=" << *c;
  if (r) os << " r=" << *r;
  if (s) os << " s=" << *s;
  if (family == Family::manual) {
    os << " scheme=" << scheme_name(scheme);
    os << " cosets=" << reps_string(cosets);
    if (!cosets2.empty()) os << " cosets2=" << reps_string(cosets2);
  }
  return os.str();
}

Construction generate(const GeneratorArgs& a) {
  auto need = [](const std::optional<int>& v, const char* name) {
    if (!v) throw DomainError(std::string("missing parameter --") + name);
    return *v;
  };
  switch (a.family) {
    case Family::css_I:
      return construct_css_I(a.q, a.n, need(a.c, "c"));
    case Family::css_II:
      return construct_css_II(a.q, a.n, need(a.r, "r"), a.s);
    case Family::steane_III:
      if (a.c) return construct_steane_nonprime(a.q, a.n, *a.c);
      return construct_steane_III(a.q, a.n, need(a.r, "r"), a.s);
    case Family::hermitian_IV:
      if (a.c) return construct_hermitian_IV(a.q, a.n, *a.c);
      return construct_hermitian_prime(a.q, a.n, need(a.r, "r"), a.s);
    case Family::manual: {
      if (a.cosets.empty() && a.scheme != Scheme::hermitian) throw DomainError("manual construction needs --cosets");
      require_prime_power(a.q);
      Construction out = [&] {
        switch (a.scheme) {
          case Scheme::css:
            return css(build_code(a.q, a.n, a.cosets), build_code(a.q, a.n, a.cosets2));
          case Scheme::steane:
            return steane_enlarge(build_code(a.q, a.n, a.cosets), build_code(a.q, a.n, a.cosets2));
          case Scheme::hermitian:
            break;
        }
        return hermitian(build_code(a.q * a.q, a.n, a.cosets));
      }();
      out.params.construction = "cosets " + reps_string(a.cosets);
      if (!a.cosets2.empty()) out.params.construction += "; cosets2 " + reps_string(a.cosets2);
      return out;
    }
  }
  throw DomainError("unknown family");
}

SingletonReport singleton_check(const QuantumParams& p) {
  const int d = p.d_exact.value_or(p.d_lower);
  SingletonReport rep;
  rep.slack = p.n + 2 - p.k - 2 * static_cast<std::int64_t>(d);
  if (p.d_exact && rep.slack < 0) {
    throw std::logic_error("quantum Singleton bound violated by " + p.to_string());
  }
  rep.mds = rep.slack == 0 && p.d_exact.has_value();
  return rep;
}

void record_exact_distance(QuantumParams& p, int d) {
  if (d < p.d_lower) {
    throw std::logic_error("oracle distance " + str(d) + " below the guaranteed " + str(p.d_lower));
  }
  p.d_exact = d;
  p.mds = singleton_check(p).mds;
}

}  // namespace qbch
