#include "qbch/fields.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "qbch/errors.hpp"

namespace qbch {

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int exponent = 0;
  while (q % p == 0) {
    q /= p;
    ++exponent;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<int>(p), exponent};
}

namespace {

// Multiplies the element with digits `e` (constant term first) by x modulo
// the monic polynomial f of degree K = e.size().
void times_x(std::vector<int>& e, const std::vector<int>& f, int p) {
  const std::size_t k = e.size();
  const int top = e[k - 1];
  for (std::size_t i = k - 1; i > 0; --i) e[i] = e[i - 1];
  e[0] = 0;
  if (top == 0) return;
  for (std::size_t i = 0; i < k; ++i) {
    e[i] = ((e[i] - top * f[i]) % p + p) % p;
  }
}

using Digits = std::vector<int>;

// a * b mod (f, p) for digit vectors of length K = deg f.
Digits mul_mod(const Digits& a, const Digits& b, const std::vector<int>& f, int p) {
  const std::size_t k = a.size();
  std::vector<std::int64_t> prod(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] += static_cast<std::int64_t>(a[i]) * b[j];
  }
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::int64_t top = prod[d] % p;
    if (top == 0) continue;
    for (std::size_t i = 0; i < k; ++i) prod[d - k + i] -= top * f[i];
  }
  Digits out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<int>(((prod[i] % p) + p) % p);
  return out;
}

Digits x_power(std::int64_t e, const std::vector<int>& f, int p) {
  const std::size_t k = f.size() - 1;
  Digits result(k, 0), base(k, 0);
  result[0] = 1;
  if (k == 1) {
    base[0] = (p - f[0]) % p;
  } else {
    base[1] = 1;
  }
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul_mod(result, base, f, p);
    base = mul_mod(base, base, f, p);
  }
  return result;
}

bool is_one(const Digits& d) {
  if (d[0] != 1) return false;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] != 0) return false;
  }
  return true;
}

// x has multiplicative order exactly p^K - 1 modulo f. The residue ring has
// at most p^K - 1 units, with equality only for a field, so this also
// proves f irreducible.
bool is_primitive(const std::vector<int>& f, int p, std::int64_t group_order) {
  if (f[0] == 0) return false;
  if (!is_one(x_power(group_order, f, p))) return false;
  std::int64_t rest = group_order;
  for (std::int64_t l = 2; l * l <= rest; ++l) {
    if (rest % l != 0) continue;
    while (rest % l == 0) rest /= l;
    if (is_one(x_power(group_order / l, f, p))) return false;
  }
  if (rest > 1 && is_one(x_power(group_order / rest, f, p))) return false;
  return true;
}

std::int64_t checked_power(int p, int degree) {
  std::int64_t order = 1;
  for (int i = 0; i < degree; ++i) {
    order *= p;
    if (order > kFieldOrderBudget) {
      throw BudgetExceeded("field of order " + std::to_string(p) + "^" + std::to_string(degree) +
                           " exceeds the table budget of " + std::to_string(kFieldOrderBudget) +
                           " elements");
    }
  }
  return order;
}

}  // namespace

FieldCtx FieldCtx::build(int p, int degree) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (degree < 1) throw DomainError("field extension degree must be positive");
  const std::int64_t order = checked_power(p, degree);

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.degree_ = degree;
  ctx.order_ = order;
  ctx.group_order_ = static_cast<std::int32_t>(order - 1);
  ctx.neg_one_log_ = (p == 2) ? 0 : ctx.group_order_ / 2;
  ctx.digit_weight_.resize(static_cast<std::size_t>(degree));
  ctx.digit_weight_[0] = 1;
  for (int i = 1; i < degree; ++i) ctx.digit_weight_[i] = ctx.digit_weight_[i - 1] * p;

  // Candidates in lexicographic order of (c_0, c_1, ..., c_{K-1}): the index
  // has c_0 as its most significant base-p digit.
  const auto k = static_cast<std::size_t>(degree);
  std::vector<int> f(k + 1, 0);
  f[k] = 1;
  bool found = false;
  for (std::int64_t idx = 0; idx < order && !found; ++idx) {
    std::int64_t rest = idx;
    for (std::size_t i = k; i-- > 0;) {
      f[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    found = is_primitive(f, p, ctx.group_order_);
  }
  if (!found) throw std::logic_error("no primitive polynomial found");
  ctx.defining_poly_ = f;

  ctx.antilog_.resize(static_cast<std::size_t>(ctx.group_order_));
  ctx.log_.assign(static_cast<std::size_t>(order), -1);
  std::vector<int> e(k, 0);
  e[0] = 1;
  for (std::int32_t i = 0; i < ctx.group_order_; ++i) {
    std::int64_t c = 0;
    for (std::size_t j = 0; j < k; ++j) c += e[j] * ctx.digit_weight_[j];
    ctx.antilog_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(c);
    ctx.log_[static_cast<std::size_t>(c)] = i;
    times_x(e, f, p);
  }

  ctx.zech_.resize(static_cast<std::size_t>(ctx.group_order_));
  for (std::int32_t i = 0; i < ctx.group_order_; ++i) {
    std::int64_t c = ctx.antilog_[static_cast<std::size_t>(i)];
    c = (c % p == p - 1) ? c - (p - 1) : c + 1;
    ctx.zech_[static_cast<std::size_t>(i)] = ctx.log_[static_cast<std::size_t>(c)];
  }
  return ctx;
}

FieldElem FieldCtx::from_log(std::int64_t e) const {
  std::int64_t r = e % group_order_;
  if (r < 0) r += group_order_;
  return FieldElem::from_log(static_cast<std::int32_t>(r));
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
  std::int64_t r = v % p_;
  if (r < 0) r += p_;
  return from_code(r);
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int32_t d = b.log() - a.log();
  if (d < 0) d += group_order_;
  const std::int32_t z = zech_[static_cast<std::size_t>(d)];
  if (z < 0) return FieldElem{};
  std::int32_t r = a.log() + z;
  if (r >= group_order_) r -= group_order_;
  return FieldElem::from_log(r);
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  if (a.is_zero() || b.is_zero()) return FieldElem{};
  std::int32_t r = a.log() + b.log();
  if (r >= group_order_) r -= group_order_;
  return FieldElem::from_log(r);
}

FieldElem FieldCtx::div(FieldElem a, FieldElem b) const {
  if (b.is_zero()) throw DomainError("division by zero field element");
  if (a.is_zero()) return a;
  std::int32_t r = a.log() - b.log();
  if (r < 0) r += group_order_;
  return FieldElem::from_log(r);
}

FieldElem FieldCtx::neg(FieldElem a) const {
  if (a.is_zero()) return a;
  std::int32_t r = a.log() + neg_one_log_;
  if (r >= group_order_) r -= group_order_;
  return FieldElem::from_log(r);
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.is_zero()) throw DomainError("inverse of zero field element");
  return FieldElem::from_log(a.log() == 0 ? 0 : group_order_ - a.log());
}

FieldElem FieldCtx::pow(FieldElem a, std::int64_t k) const {
  if (a.is_zero()) {
    if (k < 0) throw DomainError("negative power of zero field element");
    return k == 0 ? one() : a;
  }
  std::int64_t r = static_cast<std::int64_t>(a.log()) * (k % group_order_) % group_order_;
  return from_log(r);
}

std::int64_t FieldCtx::code(FieldElem a) const {
  return a.is_zero() ? 0 : antilog_[static_cast<std::size_t>(a.log())];
}

FieldElem FieldCtx::from_code(std::int64_t c) const {
  if (c < 0 || c >= order_) throw DomainError("field element code out of range");
  const std::int32_t e = log_[static_cast<std::size_t>(c)];
  return e < 0 ? FieldElem{} : FieldElem::from_log(e);
}

int FieldCtx::coordinate(FieldElem a, int i) const {
  return static_cast<int>(code(a) / digit_weight_[static_cast<std::size_t>(i)] % p_);
}

bool FieldCtx::has_subfield(std::int64_t q) const {
  const auto pp = as_prime_power(q);
  return pp && pp->prime == p_ && degree_ % pp->exponent == 0;
}

std::int64_t FieldCtx::subfield_step(std::int64_t q) const {
  if (!has_subfield(q)) {
    throw DomainError(std::to_string(q) + " is not the order of a subfield of F_" +
                      std::to_string(order_));
  }
  return group_order_ / (q - 1);
}

bool FieldCtx::in_subfield(FieldElem a, std::int64_t q) const {
  const std::int64_t step = subfield_step(q);
  return a.is_zero() || a.log() % step == 0;
}

std::vector<FieldElem> FieldCtx::subfield_elements(std::int64_t q) const {
  const std::int64_t step = subfield_step(q);
  std::vector<FieldElem> out;
  out.reserve(static_cast<std::size_t>(q));
  out.push_back(zero());
  for (std::int64_t t = 0; t < q - 1; ++t) out.push_back(from_log(t * step));
  return out;
}

FieldElem FieldCtx::nth_root_of_unity(std::int64_t n) const {
  if (n < 1 || group_order_ % n != 0) {
    throw DomainError(std::to_string(n) + " does not divide " + std::to_string(group_order_));
  }
  return from_log(group_order_ / n);
}

std::int64_t FieldCtx::element_order(FieldElem a) const {
  if (a.is_zero()) throw DomainError("zero has no multiplicative order");
  return group_order_ / std::gcd<std::int64_t>(group_order_, a.log());
}

std::shared_ptr<const FieldCtx> make_field(int p, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const FieldCtx>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, degree}); it != cache.end()) return it->second;
  }
  auto ctx = std::make_shared<const FieldCtx>(FieldCtx::build(p, degree));
  std::lock_guard lock(mutex);
  return cache.try_emplace({p, degree}, std::move(ctx)).first->second;
}

}  // namespace qbch
