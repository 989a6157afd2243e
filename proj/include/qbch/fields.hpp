#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace qbch {

// Largest field (number of elements) for which tables are built.
inline constexpr std::int64_t kFieldOrderBudget = std::int64_t{1} << 20;

bool is_prime(std::int64_t v);

struct PrimePower {
  int prime = 0;
  int exponent = 0;
};

// Decomposes q = p^j; nullopt if q is not a prime power (q >= 2).
std::optional<PrimePower> as_prime_power(std::int64_t q);

// An element of a FieldCtx in discrete-log form: either zero or gamma^e
// with 0 <= e < order - 1. Equality is representation equality.
class FieldElem {
 public:
  constexpr FieldElem() = default;

  static constexpr FieldElem from_log(std::int32_t e) { return FieldElem(e); }

  constexpr bool is_zero() const { return log_ < 0; }
  // Discrete log; only meaningful when !is_zero().
  constexpr std::int32_t log() const { return log_; }

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

 private:
  constexpr explicit FieldElem(std::int32_t e) : log_(e) {}
  std::int32_t log_ = -1;
};

// The field F_{p^K}, built from the lexicographically smallest monic
// primitive polynomial (coefficients compared constant term first).
// Immutable after construction.
class FieldCtx {
 public:
  // Builds a fresh context. Prefer make_field(), which caches.
  static FieldCtx build(int p, int degree);

  int characteristic() const { return p_; }
  int degree() const { return degree_; }
  std::int64_t order() const { return order_; }
  // Order of the multiplicative group, order() - 1.
  std::int32_t group_order() const { return group_order_; }
  // Monic defining polynomial over F_p, constant term first (size K + 1).
  std::span<const int> defining_poly() const { return defining_poly_; }

  FieldElem zero() const { return FieldElem{}; }
  FieldElem one() const { return FieldElem::from_log(0); }
  FieldElem primitive() const { return from_log(1); }
  // gamma^e for any integer e.
  FieldElem from_log(std::int64_t e) const;
  // Image of the integer v under Z -> F_p -> F_{p^K}.
  FieldElem from_int(std::int64_t v) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem div(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::int64_t k) const;

  // Zech logarithm: Z(i) with gamma^Z(i) = 1 + gamma^i, or -1 when 1 + gamma^i = 0.
  std::int32_t zech(std::int32_t i) const { return zech_[static_cast<std::size_t>(i)]; }

  // Polynomial-basis code of an element: sum of coordinate_i * p^i.
  std::int64_t code(FieldElem a) const;
  FieldElem from_code(std::int64_t code) const;
  // Coordinate i (0 <= i < K) of a in the basis 1, gamma, ..., gamma^(K-1).
  int coordinate(FieldElem a, int i) const;

  // True iff q = p^j with j | K.
  bool has_subfield(std::int64_t q) const;
  bool in_subfield(FieldElem a, std::int64_t q) const;
  // {0} followed by gamma^(t(order-1)/(q-1)) for t = 0..q-2.
  std::vector<FieldElem> subfield_elements(std::int64_t q) const;

  // gamma^((order-1)/n); requires n | order - 1.
  FieldElem nth_root_of_unity(std::int64_t n) const;
  // Multiplicative order of a nonzero element.
  std::int64_t element_order(FieldElem a) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p_ == b.p_ && a.degree_ == b.degree_;
  }

 private:
  FieldCtx() = default;
  std::int64_t subfield_step(std::int64_t q) const;

  int p_ = 0;
  int degree_ = 0;
  std::int64_t order_ = 0;
  std::int32_t group_order_ = 0;
  std::int32_t neg_one_log_ = 0;
  std::vector<int> defining_poly_;
  std::vector<std::int32_t> antilog_;  // log -> code
  std::vector<std::int32_t> log_;      // code -> log, -1 for code 0
  std::vector<std::int32_t> zech_;
  std::vector<std::int64_t> digit_weight_;
};

// Cached, shared construction of F_{p^K}. Throws DomainError for a
// non-prime p or K < 1, BudgetExceeded when p^K > kFieldOrderBudget.
std::shared_ptr<const FieldCtx> make_field(int p, int degree);

}  // namespace qbch
