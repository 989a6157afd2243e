#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qbch/fields.hpp"

namespace qbch {

// Polynomial with coefficients in the subfield F_q of a FieldCtx, lowest
// degree first, no trailing zeros. The zero polynomial has no coefficients.
class Poly {
 public:
  Poly(std::shared_ptr<const FieldCtx> field, std::int64_t base_q, std::vector<FieldElem> coeffs = {});

  static Poly constant(std::shared_ptr<const FieldCtx> field, std::int64_t base_q, FieldElem c);
  // c * x^degree
  static Poly monomial(std::shared_ptr<const FieldCtx> field, std::int64_t base_q, FieldElem c, int degree);
  static Poly x_n_minus_one(std::shared_ptr<const FieldCtx> field, std::int64_t base_q, std::int64_t n);

  const FieldCtx& field() const { return *field_; }
  const std::shared_ptr<const FieldCtx>& field_ptr() const { return field_; }
  std::int64_t base_q() const { return base_q_; }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const FieldElem> coeffs() const { return coeffs_; }
  FieldElem coeff(int i) const;
  FieldElem leading() const;

  Poly monic() const;
  FieldElem eval(FieldElem x) const;
  // x^deg f(1/x)
  Poly reciprocal() const;
  // Raises every coefficient to the given power (q-th power conjugation).
  Poly conjugate(std::int64_t power) const;
  bool coefficients_in(std::int64_t q) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void trim();
  void require_compatible(const Poly& other) const;

  std::shared_ptr<const FieldCtx> field_;
  std::int64_t base_q_;
  std::vector<FieldElem> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

// Throws DomainError on a zero divisor or mismatched fields.
DivMod divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace qbch
