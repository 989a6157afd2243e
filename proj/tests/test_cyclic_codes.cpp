#include <doctest.h>

#include <vector>

#include "qbch/cyclic_code.hpp"
#include "qbch/errors.hpp"

using namespace qbch;
using V = std::vector<Residue>;

TEST_CASE("polynomial arithmetic") {
  const auto f = make_field(5, 1);
  auto P = [&](std::vector<int> c) {
    std::vector<FieldElem> e;
    for (int v : c) e.push_back(f->from_int(v));
    return Poly(f, 5, e);
  };
  const Poly a = P({1, 2, 3});
  const Poly b = P({4, 1});
  CHECK(a + b == P({0, 3, 3}));
  CHECK(a * b == P({4, 4, 4, 3}));
  const DivMod dm = divmod(a * b + P({2}), b);
  CHECK(dm.quotient == a);
  CHECK(dm.remainder == P({2}));
  CHECK(gcd(a * b, b * b) == b.monic());
  CHECK(P({1, 2, 3}).reciprocal() == P({3, 2, 1}));
  CHECK((a - a).is_zero());
  CHECK(P({0, 0}).degree() == -1);
  CHECK_THROWS_AS(divmod(a, P({})), DomainError);
  CHECK(Poly::x_n_minus_one(f, 5, 3) == P({4, 0, 0, 1}));
}

TEST_CASE("minimal polynomials") {
  const auto field = splitting_field(5, 31);
  CHECK(field->order() == 125);
  const FieldElem alpha = field->nth_root_of_unity(31);
  const Poly m8 = minimal_polynomial(field, alpha, coset_of(8, 5, 31), 5);
  CHECK(m8.degree() == 3);
  CHECK(m8.coefficients_in(5));
  CHECK(m8.eval(field->pow(alpha, 8)).is_zero());
  CHECK(m8.eval(field->pow(alpha, 14)).is_zero());
  CHECK_FALSE(m8.eval(field->pow(alpha, 10)).is_zero());
  const Poly m0 = minimal_polynomial(field, alpha, coset_of(0, 5, 31), 5);
  CHECK(m0 == Poly(field, 5, {field->from_int(-1), field->one()}));
}

TEST_CASE("defining sets") {
  const DefiningSet z = DefiningSet::from_cosets(5, 31, V{4, 8});
  CHECK(z.residues == V{4, 7, 8, 9, 14, 20});
  CHECK(z.coset_reps == V{4, 8});
  CHECK(z.contains(20));
  CHECK_FALSE(z.contains(5));
  CHECK(DefiningSet::from_residues(5, 31, V{8, 9, 14}).coset_reps == V{8});
  CHECK_THROWS_AS(DefiningSet::from_residues(5, 31, V{8, 9}), DomainError);
  CHECK_THROWS_AS(DefiningSet::from_cosets(5, 31, V{8, 9}), DomainError);
  CHECK(DefiningSet::from_cosets(5, 31, V{8}).is_subset_of(z));
}

TEST_CASE("designed distance") {
  const DefiningSet z = DefiningSet::from_cosets(5, 31, V{4, 8});
  const DesignedDistance dd = bch_designed_distance(z);
  CHECK(dd.delta == 4);
  CHECK(dd.start == 7);
  CHECK(bch_designed_distance(DefiningSet::from_cosets(5, 31, V{})).delta == 1);
  // wrap-around run n-1, 0
  const DefiningSet wrap = DefiningSet::from_cosets(5, 31, V{0, 6});
  CHECK(bch_designed_distance(wrap).delta == 3);
  CHECK(bch_designed_distance(wrap).start == 30);
  V everything;
  for (const Coset& c : partition(5, 31).cosets) everything.push_back(c.rep);
  CHECK_THROWS_AS(bch_designed_distance(DefiningSet::from_cosets(5, 31, everything)), ZeroCodeError);
}

TEST_CASE("codes") {
  const CyclicCode c = build_code(5, 31, V{4, 8});
  CHECK(c.dimension() == 25);
  CHECK(c.designed_distance() == 4);
  CHECK(c.generator().degree() == 6);
  const auto f = c.field();
  CHECK((Poly::x_n_minus_one(f, 5, 31) % c.generator()).is_zero());
  CHECK(contains_word(c, c.generator()));
  CHECK(contains_word(c, Poly::monomial(f, 5, f->one(), 5) * c.generator()));
  CHECK_FALSE(contains_word(c, Poly::monomial(f, 5, f->one(), 5)));

  const CyclicCode c719 = build_code(7, 19, V{2});
  CHECK(c719.dimension() == 16);
  CHECK(c719.designed_distance() == 3);

  const CyclicCode whole = build_code(5, 31, V{});
  CHECK(whole.dimension() == 31);
  CHECK(whole.designed_distance() == 1);
  CHECK(whole.generator().degree() == 0);

  V everything;
  for (const Coset& k : partition(5, 31).cosets) everything.push_back(k.rep);
  const CyclicCode zero = build_code(5, 31, everything);
  CHECK(zero.is_zero_code());
  CHECK(zero.designed_distance() == 32);
}

TEST_CASE("code containment") {
  const CyclicCode c1 = build_code(7, 19, V{2});
  const CyclicCode c2 = build_code(7, 19, V{0, 2, 1});
  CHECK(code_contains(c1, c2));
  CHECK_FALSE(code_contains(c2, c1));
  CHECK(code_contains(c1, c1));
  CHECK_THROWS_AS(code_contains(c1, build_code(7, 20, V{})), DomainError);
}

TEST_CASE("duals") {
  const DefiningSet z = DefiningSet::from_cosets(5, 31, V{8});
  const DefiningSet dual = dual_defining_set(z);
  CHECK(dual.size() == 28);
  CHECK_FALSE(dual.contains(22));
  CHECK(dual.contains(8));
  CHECK(dual_defining_set(dual) == z);
  const CyclicCode c = build_code(z);
  CHECK(build_code(dual).generator() == dual_generator(c));
}

TEST_CASE("Euclidean dual containment") {
  CHECK(is_euclidean_dual_containing(DefiningSet::from_cosets(5, 31, V{8})));
  CHECK(is_euclidean_dual_containing(DefiningSet::from_cosets(5, 31, V{4, 8})));
  CHECK_FALSE(is_euclidean_dual_containing(DefiningSet::from_cosets(5, 31, V{0})));
  CHECK_FALSE(is_euclidean_dual_containing(DefiningSet::from_cosets(5, 31, V{8, 17})));
  CHECK(euclidean_dual_contained_by_division(build_code(5, 31, V{4, 8})));
  CHECK_FALSE(euclidean_dual_contained_by_division(build_code(5, 31, V{8, 17})));
}

TEST_CASE("Hermitian dual containment") {
  CHECK(is_hermitian_dual_containing(DefiningSet::from_cosets(25, 13, V{6}), 5));
  CHECK_FALSE(is_hermitian_dual_containing(DefiningSet::from_cosets(25, 13, V{0}), 5));
  CHECK(hermitian_dual_contained_by_division(build_code(25, 13, V{6}), 5));

  V reps;
  for (Residue s = 3; s <= 12; ++s) {
    const Residue rep = coset_of(s, 49, 144).rep;
    if (std::find(reps.begin(), reps.end(), rep) == reps.end()) reps.push_back(rep);
  }
  const DefiningSet z = DefiningSet::from_cosets(49, 144, reps);
  CHECK(is_hermitian_dual_containing(z, 7));
  const CyclicCode c = build_code(z);
  CHECK(hermitian_dual_contained_by_division(c, 7));
  CHECK(c.designed_distance() >= 11);
  CHECK_THROWS_AS(is_hermitian_dual_containing(DefiningSet::from_cosets(5, 31, V{8}), 3), DomainError);
}

TEST_CASE("splitting field budget") {
  CHECK(splitting_field(49, 144)->order() == 117649);
  CHECK_THROWS_AS(splitting_field(5, 311), BudgetExceeded);
  CHECK_THROWS_AS(splitting_field(6, 7), DomainError);
}
