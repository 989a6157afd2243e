#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "qbch/errors.hpp"
#include "qbch/oracle.hpp"
#include "qbch/quantum.hpp"

using namespace qbch;
using V = std::vector<Residue>;

namespace {

Poly word_poly(const CyclicCode& c, const std::vector<FieldElem>& w) { return Poly(c.field(), c.q(), w); }

int weight(const Poly& p) {
  int w = 0;
  for (FieldElem e : p.coeffs()) w += !e.is_zero();
  return w;
}

// Minimum weight over m(x) g(x) for all nonzero messages, by polynomial
// multiplication only. `reject` drops words that should not count.
template <class Reject>
int brute_min_weight(const CyclicCode& c, Reject reject) {
  const auto f = c.field();
  const auto alphabet = f->subfield_elements(c.q());
  const auto k = static_cast<std::size_t>(c.dimension());
  std::vector<std::size_t> digits(k, 0);
  int best = static_cast<int>(c.n()) + 1;
  while (true) {
    std::size_t i = 0;
    while (i < k && ++digits[i] == alphabet.size()) digits[i++] = 0;
    if (i == k) break;
    std::vector<FieldElem> m(k);
    for (std::size_t j = 0; j < k; ++j) m[j] = alphabet[digits[j]];
    const Poly word = Poly(f, c.q(), m) * c.generator();
    if (!reject(word)) best = std::min(best, weight(word));
  }
  return best;
}

int brute_min_weight(const CyclicCode& c) {
  return brute_min_weight(c, [](const Poly&) { return false; });
}

void check_witness(const CyclicCode& c, const WeightReport& r) {
  REQUIRE(r.weight);
  REQUIRE(r.word.size() == static_cast<std::size_t>(c.n()));
  CHECK(contains_word(c, word_poly(c, r.word)));
  CHECK(static_cast<int>(r.support.size()) == *r.weight);
  for (std::int64_t pos : r.support) CHECK_FALSE(r.word[static_cast<std::size_t>(pos)].is_zero());
  CHECK(parity_check_rows(c).annihilates(r.word));
}

bool same(const WeightReport& a, const WeightReport& b) {
  return a.mode == b.mode && a.weight == b.weight && a.support == b.support && a.word == b.word &&
         a.budget == b.budget && a.source == b.source;
}

}  // namespace

TEST_CASE("parity checks") {
  const CyclicCode c = build_code(25, 13, V{6});
  const ParityCheck pc = parity_check_rows(c);
  CHECK(pc.rows.size() == 2);
  CHECK(pc.residues == V{6, 7});
  std::vector<FieldElem> zero(13);
  CHECK(pc.annihilates(zero));
  auto g = std::vector<FieldElem>(c.generator().coeffs().begin(), c.generator().coeffs().end());
  g.resize(13);
  CHECK(pc.annihilates(g));
  std::rotate(g.begin(), g.begin() + 5, g.end());
  CHECK(pc.annihilates(g));
  std::vector<FieldElem> unit(13);
  unit[0] = c.field()->one();
  CHECK_FALSE(pc.annihilates(unit));
  CHECK_THROWS_AS(parity_check_rows(c, c.field()->primitive()), DomainError);
}

TEST_CASE("frozen example: [13, 11]_25") {
  const CyclicCode c = build_code(25, 13, V{6});
  const WeightReport r = min_weight_search(c, 3);
  CHECK(r.mode == OracleMode::exact);
  CHECK(r.weight == 3);
  CHECK(r.support == std::vector<std::int64_t>{0, 1, 2});
  check_witness(c, r);
}

TEST_CASE("classical codes with known distances") {
  struct Known {
    std::int64_t q, n;
    V reps;
    int d;
  };
  const std::vector<Known> known = {
      {2, 7, {1}, 3},       // Hamming
      {2, 15, {1, 3}, 5},   // BCH
      {2, 23, {1}, 7},      // binary Golay
      {3, 11, {1}, 5},      // ternary Golay
      {4, 5, {1}, 3},
      {16, 17, {1, 3}, 5},  // MDS by the BCH and Singleton bounds
  };
  for (const Known& k : known) {
    CAPTURE(k.q);
    CAPTURE(k.n);
    const CyclicCode c = build_code(k.q, k.n, k.reps);
    const WeightReport s = min_weight_search(c, k.d);
    CHECK(s.mode == OracleMode::exact);
    CHECK(s.weight == k.d);
    check_witness(c, s);
    if (std::pow(static_cast<double>(k.q), static_cast<double>(c.dimension())) <= 1e5) {
      const WeightReport e = enumerate_min_weight(c);
      CHECK(e.mode == OracleMode::exact);
      CHECK(e.weight == k.d);
      check_witness(c, e);
      CHECK(brute_min_weight(c) == k.d);
    }
  }
}

TEST_CASE("degenerate codes") {
  const CyclicCode whole = build_code(5, 31, V{});
  CHECK(min_weight_search(whole, 1).weight == 1);
  CHECK(min_weight_search(whole, 1).support == std::vector<std::int64_t>{0});
  V all;
  for (const Coset& c : partition(3, 11).cosets) all.push_back(c.rep);
  const CyclicCode zero = build_code(3, 11, all);
  CHECK(min_weight_search(zero, 3).mode == OracleMode::empty_code);
  CHECK(enumerate_min_weight(zero).mode == OracleMode::empty_code);
  CHECK_FALSE(enumerate_min_weight(zero).weight);
}

TEST_CASE("search modes and budgets") {
  const CyclicCode golay = build_code(3, 11, V{1});
  const WeightReport below = min_weight_search(golay, 4);
  CHECK(below.mode == OracleMode::no_word_below_budget);
  CHECK(below.budget == 4);
  CHECK_FALSE(below.weight);
  const WeightReport upper = min_weight_search(golay, 6, 5);
  CHECK(upper.mode == OracleMode::upper_bound_found);
  CHECK(upper.weight == 5);
  CHECK_THROWS_AS(min_weight_search(golay, 3, 4), DomainError);

  OracleLimits tight;
  tight.codewords = 100;
  tight.support_ops = 10;
  CHECK_THROWS_AS(enumerate_min_weight(golay, tight), BudgetExceeded);
  CHECK_THROWS_AS(min_weight_search(golay, 5, 1, tight), BudgetExceeded);
  CHECK(support_search_cost(golay, 1, 5) > support_search_cost(golay, 1, 4));
}

TEST_CASE("CSS distance by enumeration") {
  const Construction con = construct_css_II(3, 11, 1);
  const CyclicCode& c1 = con.first;
  const CyclicCode& c2 = *con.second;
  const WeightReport r = css_distance(c1, c2);
  CHECK(r.mode == OracleMode::exact);
  CHECK(r.weight == 5);

  const int primal = brute_min_weight(c1, [&](const Poly& w) { return contains_word(c2, w); });
  const CyclicCode d2 = build_code(dual_defining_set(c2.defining_set()));
  const CyclicCode d1 = build_code(dual_defining_set(c1.defining_set()));
  const int dual = brute_min_weight(d2, [&](const Poly& w) { return contains_word(d1, w); });
  CHECK(std::min(primal, dual) == 5);

  CHECK_THROWS_AS(css_distance(c1, c1), HypothesisError);
  CHECK_THROWS_AS(css_distance(c2, c1), HypothesisError);

  const Construction t13 = construct_css_II(3, 13, 2, 7);
  const WeightReport r13 = css_distance(t13.first, *t13.second);
  CHECK(r13.mode == OracleMode::exact);
  CHECK(r13.weight >= 4);
}

TEST_CASE("serial and parallel kernels agree") {
  const std::vector<std::pair<CyclicCode, int>> codes = {
      {build_code(25, 13, V{6}), 3}, {build_code(16, 17, V{1, 3}), 5}, {build_code(3, 13, V{1, 2}), 0},
      {build_code(2, 31, V{1, 3, 5}), 0}, {build_code(4, 15, V{1, 2, 3, 5}), 0}};
  for (const auto& [c, known] : codes) {
    CAPTURE(c.n());
    int d = known;
    if (d == 0) {
      const WeightReport e = serial::enumerate_min_weight(c);
      CHECK(same(enumerate_min_weight(c), e));
      d = *e.weight;
    }
    CHECK(same(min_weight_search(c, d), serial::min_weight_search(c, d)));
  }
  const Construction con = construct_css_II(3, 13, 2, 7);
  CHECK(same(css_distance(con.first, *con.second), serial::css_distance(con.first, *con.second)));
}

TEST_CASE("Hermitian dual membership") {
  const Construction con = construct_hermitian_prime(5, 13, 1);
  const CyclicCode& c = con.first;
  const WeightReport r = min_weight_search(c, 3);
  CHECK_FALSE(in_hermitian_dual(c, 5, r.word));
  auto dual = dual_generator(c).conjugate(5);
  std::vector<FieldElem> w(dual.coeffs().begin(), dual.coeffs().end());
  w.resize(13);
  CHECK(in_hermitian_dual(c, 5, w));
  CHECK(contains_word(c, dual));
}
