#include <doctest.h>

#include <numeric>
#include <vector>

#include "qbch/cyclotomic.hpp"
#include "qbch/errors.hpp"

using namespace qbch;
using V = std::vector<Residue>;

TEST_CASE("multiplicative order") {
  CHECK(mult_order(31, 5) == 3);
  CHECK(mult_order(19, 7) == 3);
  CHECK(mult_order(1093, 3) == 7);
  CHECK(mult_order(13, 25) == 2);
  CHECK(mult_order(144, 49) == 3);
  CHECK(mult_order(1, 5) == 1);
  CHECK_THROWS_AS(mult_order(9, 3), DomainError);
}

TEST_CASE("coset examples") {
  CHECK(coset_of(8, 5, 31).elems == V{8, 9, 14});
  CHECK(coset_of(14, 5, 31).rep == 8);
  CHECK(coset_of(2, 7, 19).elems == V{2, 3, 14});
  CHECK(coset_of(16, 7, 19).elems == V{5, 16, 17});
  CHECK(coset_of(6, 25, 13).elems == V{6, 7});
  CHECK(coset_of(4, 49, 144).elems == V{4, 52, 100});
  CHECK(coset_of(0, 5, 31).elems == V{0});
  CHECK(coset_of(-1, 5, 31).rep == 6);
}

TEST_CASE("partitions") {
  const CosetPartition p531 = partition(5, 31);
  CHECK(p531.m == 3);
  CHECK(p531.cosets.size() == 11);
  CHECK(p531.containing(9).rep == 8);

  const CosetPartition p724 = partition(7, 24);
  V singletons;
  for (const Coset& c : p724.cosets)
    if (c.size() == 1) singletons.push_back(c.rep);
  CHECK(singletons == V{0, 4, 8, 12, 16, 20});

  const CosetPartition trivial = partition(5, 1);
  CHECK(trivial.cosets.size() == 1);
  CHECK(trivial.cosets[0].elems == V{0});
  CHECK_THROWS_AS(partition(3, 9), DomainError);
}

TEST_CASE("linear congruences") {
  CHECK(solve_linear_congruence(4, 1, 31) == V{8});
  CHECK(solve_linear_congruence(2, 1, 4).empty());
  CHECK(solve_linear_congruence(24, 1, 13) == V{6});
  CHECK(solve_linear_congruence(2, 2, 4) == V{1, 3});
  CHECK(solve_linear_congruence(0, 0, 3) == V{0, 1, 2});
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t a = -3; a <= 2 * n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        V brute;
        for (std::int64_t x = 0; x < n; ++x)
          if (mod(a * x - b, n) == 0) brute.push_back(x);
        REQUIRE(solve_linear_congruence(a, b, n) == brute);
      }
    }
  }
}

TEST_CASE("consecutive cosets") {
  CHECK(find_consecutive_coset(5, 31) == 8);
  CHECK(find_consecutive_coset(25, 13) == 6);
  CHECK(find_consecutive_coset(7, 19) == 16);
  CHECK_THROWS_AS(find_consecutive_coset(7, 24), HypothesisError);
  CHECK_THROWS_AS(find_consecutive_coset(3, 9), DomainError);
}

TEST_CASE("negate and scale") {
  CHECK(negate_set(V{6, 7}, 13) == V{6, 7});
  CHECK(negate_set(V{8, 9, 14}, 31) == V{17, 22, 23});
  CHECK(negate_set(V{0}, 5) == V{0});
  CHECK(scale_set(V{6, 7}, -5, 13) == V{4, 9});
  CHECK(scale_set(V{1, 2, 3}, 2, 4) == V{0, 2});
}
