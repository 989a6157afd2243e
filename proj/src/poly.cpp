#include "qbch/poly.hpp"

#include <algorithm>
#include <utility>

#include "qbch/errors.hpp"

namespace qbch {

Poly::Poly(std::shared_ptr<const FieldCtx> field, std::int64_t base_q, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), base_q_(base_q), coeffs_(std::move(coeffs)) {
  if (!field_) throw DomainError("polynomial needs a field");
  trim();
}

Poly Poly::constant(std::shared_ptr<const FieldCtx> field, std::int64_t base_q, FieldElem c) {
  return Poly(std::move(field), base_q, {c});
}

Poly Poly::monomial(std::shared_ptr<const FieldCtx> field, std::int64_t base_q, FieldElem c, int degree) {
  std::vector<FieldElem> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Poly(std::move(field), base_q, std::move(coeffs));
}

Poly Poly::x_n_minus_one(std::shared_ptr<const FieldCtx> field, std::int64_t base_q, std::int64_t n) {
  std::vector<FieldElem> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs.front() = field->neg(field->one());
  coeffs.back() = field->one();
  return Poly(std::move(field), base_q, std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_compatible(const Poly& other) const {
  if (!(*field_ == *other.field_) || base_q_ != other.base_q_) {
    throw DomainError("polynomials over different fields");
  }
}

FieldElem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return FieldElem{};
  return coeffs_[static_cast<std::size_t>(i)];
}

FieldElem Poly::leading() const { return coeffs_.empty() ? FieldElem{} : coeffs_.back(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const FieldElem lead_inv = field_->inv(leading());
  std::vector<FieldElem> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->mul(coeffs_[i], lead_inv);
  return Poly(field_, base_q_, std::move(out));
}

FieldElem Poly::eval(FieldElem x) const {
  FieldElem acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_->add(field_->mul(acc, x), *it);
  }
  return acc;
}

Poly Poly::reciprocal() const {
  return Poly(field_, base_q_, std::vector<FieldElem>(coeffs_.rbegin(), coeffs_.rend()));
}

Poly Poly::conjugate(std::int64_t power) const {
  std::vector<FieldElem> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->pow(coeffs_[i], power);
  return Poly(field_, base_q_, std::move(out));
}

bool Poly::coefficients_in(std::int64_t q) const {
  for (FieldElem c : coeffs_) {
    if (!field_->in_subfield(c, q)) return false;
  }
  return true;
}

Poly Poly::operator-() const {
  std::vector<FieldElem> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->neg(coeffs_[i]);
  return Poly(field_, base_q_, std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  a.require_compatible(b);
  const FieldCtx& f = *a.field_;
  std::vector<FieldElem> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  return Poly(a.field_, a.base_q_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  a.require_compatible(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_, a.base_q_);
  const FieldCtx& f = *a.field_;
  std::vector<FieldElem> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(a.field_, a.base_q_, std::move(out));
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (!(a.field() == b.field()) || a.base_q() != b.base_q()) {
    throw DomainError("polynomials over different fields");
  }
  const FieldCtx& f = a.field();
  std::vector<FieldElem> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const int da = a.degree();
  std::vector<FieldElem> quot(da >= db ? static_cast<std::size_t>(da - db + 1) : 0);
  const FieldElem lead_inv = f.inv(b.leading());
  const auto bc = b.coeffs();
  for (int i = da; i >= db; --i) {
    const FieldElem top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    const FieldElem t = f.mul(top, lead_inv);
    quot[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = f.sub(slot, f.mul(t, bc[static_cast<std::size_t>(j)]));
    }
  }
  return {Poly(a.field_ptr(), a.base_q(), std::move(quot)), Poly(a.field_ptr(), a.base_q(), std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

bool operator==(const Poly& a, const Poly& b) {
  return *a.field_ == *b.field_ && a.base_q_ == b.base_q_ && a.coeffs_ == b.coeffs_;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace qbch
