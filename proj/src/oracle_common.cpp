#include <algorithm>
#include <stdexcept>
#include <string>

#include "oracle_kernels.hpp"
#include "qbch/errors.hpp"

namespace qbch {

std::string_view mode_name(OracleMode m) {
  switch (m) {
    case OracleMode::exact: return "exact";
    case OracleMode::upper_bound_found: return "upper_bound_found";
    case OracleMode::no_word_below_budget: return "no_word_below_budget";
    case OracleMode::empty_code: return "empty_code";
  }
  return "empty_code";
}

bool ParityCheck::annihilates(std::span<const FieldElem> word) const {
  for (const auto& row : rows) {
    FieldElem acc = field->zero();
    for (std::size_t j = 0; j < word.size(); ++j) acc = field->add(acc, field->mul(word[j], row[j]));
    if (!acc.is_zero()) return false;
  }
  return true;
}

ParityCheck parity_check_rows(const CyclicCode& c) { return parity_check_rows(c, c.alpha()); }

ParityCheck parity_check_rows(const CyclicCode& c, FieldElem alpha) {
  const FieldCtx& f = *c.field();
  if (alpha.is_zero() || f.element_order(alpha) != c.n()) {
    throw DomainError("parity checks need an element of order " + std::to_string(c.n()));
  }
  ParityCheck pc{.field = c.field(), .residues = c.defining_set().residues, .rows = {}};
  for (Residue z : pc.residues) {
    std::vector<FieldElem> row(static_cast<std::size_t>(c.n()));
    for (std::int64_t j = 0; j < c.n(); ++j) row[static_cast<std::size_t>(j)] = f.pow(alpha, z * j);
    pc.rows.push_back(std::move(row));
  }
  return pc;
}

bool in_hermitian_dual(const CyclicCode& c, std::int64_t q, std::span<const FieldElem> word) {
  const FieldCtx& f = *c.field();
  const auto g = c.generator().coeffs();
  for (std::int64_t shift = 0; shift < c.dimension(); ++shift) {
    FieldElem acc = f.zero();
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto pos = static_cast<std::size_t>(shift) + j;
      acc = f.add(acc, f.mul(word[pos], f.pow(g[j], q)));
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

namespace {

double binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

std::int64_t base_dim(std::int64_t q) { return as_prime_power(q)->exponent; }

}  // namespace

double support_search_cost(const CyclicCode& c, int w_min, int w_max) {
  const double rows = static_cast<double>(c.defining_set().coset_reps.size()) * c.field()->degree();
  const double dim = static_cast<double>(base_dim(c.q()));
  double total = 0;
  for (int w = std::max(w_min, 1); w <= w_max; ++w) {
    const double cols = dim * w;
    total += binomial(c.n() - 1, w - 1) * std::max(rows, 1.0) * cols * std::min(std::max(rows, 1.0), cols);
  }
  return total;
}

namespace detail {

BaseCoords::BaseCoords(const FieldCtx& field, std::int64_t q) : q_(q) {
  const auto pp = as_prime_power(q);
  if (!pp || !field.has_subfield(q)) throw DomainError("F_" + std::to_string(q) + " is not a subfield");
  if (q > 1024) throw BudgetExceeded("oracle alphabet " + std::to_string(q) + " exceeds 1024");
  p_ = pp->prime;
  dim_ = pp->exponent;
  step_ = (field.order() - 1) / (q - 1);
  const FieldElem omega = field.from_log(step_);
  for (int t = 0; t < dim_; ++t) basis_.push_back(field.pow(omega, t));

  elem_of_code_.resize(static_cast<std::size_t>(q));
  code_of_log_.assign(static_cast<std::size_t>(q - 1), 0);
  std::vector<bool> seen(static_cast<std::size_t>(q - 1), false);
  for (std::int64_t code = 0; code < q; ++code) {
    FieldElem e = field.zero();
    std::int64_t rest = code;
    for (int t = 0; t < dim_; ++t) {
      e = field.add(e, field.mul(field.from_int(rest % p_), basis_[static_cast<std::size_t>(t)]));
      rest /= p_;
    }
    elem_of_code_[static_cast<std::size_t>(code)] = e;
    if (e.is_zero()) {
      if (code != 0) throw std::logic_error("subfield basis is dependent");
      continue;
    }
    const auto slot = static_cast<std::size_t>(e.log() / step_);
    if (seen[slot]) throw std::logic_error("subfield basis is dependent");
    seen[slot] = true;
    code_of_log_[slot] = static_cast<std::uint16_t>(code);
  }

  add_.resize(static_cast<std::size_t>(q * q));
  for (std::int64_t a = 0; a < q; ++a) {
    for (std::int64_t b = 0; b < q; ++b) {
      const FieldElem s = field.add(elem_of_code_[static_cast<std::size_t>(a)], elem_of_code_[static_cast<std::size_t>(b)]);
      add_[static_cast<std::size_t>(a * q + b)] = code_of(s);
    }
  }
}

std::uint16_t BaseCoords::code_of(FieldElem e) const {
  if (e.is_zero()) return 0;
  if (e.log() % step_ != 0) throw std::logic_error("element outside the subfield");
  return code_of_log_[static_cast<std::size_t>(e.log() / step_)];
}

SupportProblem make_support_problem(const CyclicCode& c) {
  const FieldCtx& f = *c.field();
  const BaseCoords coords(f, c.q());
  SupportProblem sp;
  sp.n = static_cast<int>(c.n());
  sp.p = coords.p();
  sp.dim = coords.dim();
  const auto& reps = c.defining_set().coset_reps;
  const int degree = f.degree();
  sp.rows = static_cast<int>(reps.size()) * degree;
  sp.columns.resize(static_cast<std::size_t>(sp.n) * sp.dim * sp.rows);
  for (int pos = 0; pos < sp.n; ++pos) {
    for (int t = 0; t < sp.dim; ++t) {
      const std::size_t base = (static_cast<std::size_t>(pos) * sp.dim + t) * sp.rows;
      for (std::size_t zi = 0; zi < reps.size(); ++zi) {
        const FieldElem v = f.mul(coords.basis(t), f.pow(c.alpha(), reps[zi] * pos));
        for (int k = 0; k < degree; ++k) {
          sp.columns[base + zi * degree + k] = static_cast<std::uint8_t>(f.coordinate(v, k));
        }
      }
    }
  }
  sp.inverse.assign(static_cast<std::size_t>(sp.p), 0);
  for (int a = 1; a < sp.p; ++a) {
    for (int b = 1; b < sp.p; ++b) {
      if (a * b % sp.p == 1) sp.inverse[static_cast<std::size_t>(a)] = b;
    }
  }
  return sp;
}

std::optional<std::vector<int>> solve_support(const SupportProblem& sp, std::span<const int> support,
                                              std::vector<int>& m) {
  const int rows = sp.rows;
  const int cols = static_cast<int>(support.size()) * sp.dim;
  const int p = sp.p;
  m.assign(static_cast<std::size_t>(rows) * cols, 0);
  for (int c = 0; c < cols; ++c) {
    const int pos = support[static_cast<std::size_t>(c / sp.dim)];
    const std::size_t base = (static_cast<std::size_t>(pos) * sp.dim + c % sp.dim) * rows;
    for (int r = 0; r < rows; ++r) m[static_cast<std::size_t>(r) * cols + c] = sp.columns[base + r];
  }

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = r;
    while (sel < rows && m[static_cast<std::size_t>(sel) * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(sel) * cols,
                       m.begin() + static_cast<std::ptrdiff_t>(sel + 1) * cols,
                       m.begin() + static_cast<std::ptrdiff_t>(r) * cols);
    }
    int* prow = &m[static_cast<std::size_t>(r) * cols];
    const int inv = sp.inverse[static_cast<std::size_t>(prow[c])];
    for (int k = c; k < cols; ++k) prow[k] = prow[k] * inv % p;
    for (int o = 0; o < rows; ++o) {
      if (o == r) continue;
      int* orow = &m[static_cast<std::size_t>(o) * cols];
      const int factor = orow[c];
      if (factor == 0) continue;
      for (int k = c; k < cols; ++k) orow[k] = ((orow[k] - factor * prow[k]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (static_cast<int>(pivot_col.size()) == cols) return std::nullopt;

  int free_col = 0;
  for (std::size_t i = 0; i < pivot_col.size() && pivot_col[i] == free_col; ++i) ++free_col;
  std::vector<int> x(static_cast<std::size_t>(cols), 0);
  x[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    const int v = m[i * static_cast<std::size_t>(cols) + static_cast<std::size_t>(free_col)];
    x[static_cast<std::size_t>(pivot_col[i])] = (p - v) % p;
  }
  return x;
}

bool next_combination(std::vector<int>& comb, int n, int fixed) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= fixed; --i) {
    if (comb[static_cast<std::size_t>(i)] < n - (k - i)) {
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t checked_word_count(std::uint64_t p, std::size_t digits, std::uint64_t limit, const char* what) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (count > limit / p) {
      throw BudgetExceeded(std::string(what) + ": more than " + std::to_string(limit) + " words to enumerate");
    }
    count *= p;
  }
  return count;
}

std::uint64_t EnumProblem::word_count() const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) count *= static_cast<std::uint64_t>(p);
  return count;
}

EnumProblem make_enum_problem(std::shared_ptr<const BaseCoords> shared, std::int64_t n, const Poly& gen,
                              const std::optional<Poly>& tag_mod) {
  const BaseCoords& coords = *shared;
  EnumProblem ep;
  ep.n = static_cast<int>(n);
  ep.p = coords.p();
  ep.coords = std::move(shared);
  ep.tag_len = tag_mod ? tag_mod->degree() : 0;
  const auto& field = gen.field_ptr();
  const std::int64_t k = n - gen.degree();
  for (std::int64_t i = 0; i < k; ++i) {
    for (int t = 0; t < coords.dim(); ++t) {
      const Poly row = Poly::monomial(field, gen.base_q(), coords.basis(t), static_cast<int>(i)) * gen;
      EnumProblem::Row r;
      for (int j = 0; j <= row.degree(); ++j) {
        const std::uint16_t code = coords.code_of(row.coeff(j));
        if (code != 0) r.entries.emplace_back(j, code);
      }
      if (tag_mod) {
        const Poly rem = row % *tag_mod;
        for (int j = 0; j <= rem.degree(); ++j) {
          const std::uint16_t code = coords.code_of(rem.coeff(j));
          if (code != 0) r.tag.emplace_back(j, code);
        }
      }
      ep.rows.push_back(std::move(r));
    }
  }
  return ep;
}

void EnumState::add_row(const EnumProblem& ep, const EnumProblem::Row& row) {
  const BaseCoords& bc = *ep.coords;
  for (const auto& [pos, v] : row.entries) {
    std::uint16_t& cell = word[static_cast<std::size_t>(pos)];
    const std::uint16_t next = bc.add(cell, v);
    weight += (next != 0) - (cell != 0);
    cell = next;
  }
  for (const auto& [pos, v] : row.tag) {
    std::uint16_t& cell = tag[static_cast<std::size_t>(pos)];
    const std::uint16_t next = bc.add(cell, v);
    tag_weight += (next != 0) - (cell != 0);
    cell = next;
  }
}

std::optional<EnumHit> enumerate_block(const EnumProblem& ep, int low_digits, std::uint64_t first) {
  EnumState st;
  st.word.assign(static_cast<std::size_t>(ep.n), 0);
  st.tag.assign(static_cast<std::size_t>(ep.tag_len), 0);
  std::uint64_t count = 1;
  for (int d = 0; d < low_digits; ++d) count *= static_cast<std::uint64_t>(ep.p);
  std::uint64_t upper = first / count;
  for (std::size_t d = static_cast<std::size_t>(low_digits); d < ep.rows.size(); ++d) {
    const auto times = upper % static_cast<std::uint64_t>(ep.p);
    upper /= static_cast<std::uint64_t>(ep.p);
    for (std::uint64_t i = 0; i < times; ++i) st.add_row(ep, ep.rows[d]);
  }

  const bool tagged = ep.tag_len > 0;
  std::optional<EnumHit> best;
  auto consider = [&](std::uint64_t index) {
    if (st.weight == 0 || (tagged && st.tag_weight == 0)) return;
    if (best && st.weight >= best->weight) return;
    best = EnumHit{.weight = st.weight, .index = index, .word = st.word};
  };

  consider(first);
  std::vector<int> digits(static_cast<std::size_t>(low_digits), 0);
  for (std::uint64_t step = 1; step < count; ++step) {
    std::size_t d = 0;
    while (true) {
      st.add_row(ep, ep.rows[d]);
      if (++digits[d] == ep.p) {
        digits[d] = 0;
        ++d;
        continue;
      }
      break;
    }
    consider(first + step);
  }
  return best;
}

void keep_better(std::optional<EnumHit>& best, std::optional<EnumHit> candidate) {
  if (!candidate) return;
  if (!best || candidate->weight < best->weight ||
      (candidate->weight == best->weight && candidate->index < best->index)) {
    best = std::move(candidate);
  }
}

int prepare_support_search(const CyclicCode& c, int w_min, int w_max, const OracleLimits& limits) {
  if (w_min < 1) throw DomainError("minimum search weight must be at least 1");
  w_max = static_cast<int>(std::min<std::int64_t>(w_max, c.n()));
  if (w_max < w_min) throw DomainError("search weight range is empty");
  const double cost = support_search_cost(c, w_min, w_max);
  if (cost > limits.support_ops) {
    throw BudgetExceeded("support search up to weight " + std::to_string(w_max) + " needs about " +
                         std::to_string(static_cast<long long>(cost)) + " operations (limit " +
                         std::to_string(static_cast<long long>(limits.support_ops)) + ")");
  }
  return w_max;
}

}  // namespace detail

namespace {

std::vector<std::int64_t> support_of(std::span<const FieldElem> word) {
  std::vector<std::int64_t> s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!word[i].is_zero()) s.push_back(static_cast<std::int64_t>(i));
  }
  return s;
}

Poly as_poly(const CyclicCode& c, std::span<const FieldElem> word) {
  return Poly(c.field(), c.q(), std::vector<FieldElem>(word.begin(), word.end()));
}

std::vector<FieldElem> decode_word(const detail::BaseCoords& coords, std::span<const std::uint16_t> codes) {
  std::vector<FieldElem> w;
  w.reserve(codes.size());
  for (std::uint16_t code : codes) w.push_back(coords.elem_of(code));
  return w;
}

void check_classical_witness(const CyclicCode& c, std::span<const FieldElem> word) {
  if (!parity_check_rows(c).annihilates(word)) throw std::logic_error("oracle witness fails the parity checks");
  if (!contains_word(c, as_poly(c, word))) throw std::logic_error("oracle witness is not a multiple of g(x)");
  std::vector<FieldElem> shifted(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) shifted[(i + 1) % word.size()] = word[i];
  if (!contains_word(c, as_poly(c, shifted))) throw std::logic_error("cyclic shift of the oracle witness left the code");
}

WeightReport empty_report(std::uint64_t budget) {
  return WeightReport{.mode = OracleMode::empty_code, .weight = std::nullopt, .support = {}, .word = {},
                      .budget = budget, .source = {}};
}

}  // namespace

namespace detail {

WeightReport support_report(const CyclicCode& c, const BaseCoords& coords, const std::optional<SupportHit>& hit,
                            int w_min, int w_max) {
  if (c.is_zero_code()) return empty_report(static_cast<std::uint64_t>(w_max));
  WeightReport rep;
  rep.budget = static_cast<std::uint64_t>(w_max);
  if (!hit) {
    rep.mode = OracleMode::no_word_below_budget;
    return rep;
  }
  const FieldCtx& f = *c.field();
  std::vector<FieldElem> word(static_cast<std::size_t>(c.n()), f.zero());
  for (std::size_t i = 0; i < hit->support.size(); ++i) {
    FieldElem v = f.zero();
    for (int t = 0; t < coords.dim(); ++t) {
      const int digit = hit->digits[i * static_cast<std::size_t>(coords.dim()) + static_cast<std::size_t>(t)];
      v = f.add(v, f.mul(f.from_int(digit), coords.basis(t)));
    }
    word[static_cast<std::size_t>(hit->support[i])] = v;
  }
  rep.support = support_of(word);
  const int weight = static_cast<int>(rep.support.size());
  if (weight == 0 || weight > hit->weight || (w_min == 1 && weight != hit->weight)) {
    throw std::logic_error("support search witness has the wrong weight");
  }
  check_classical_witness(c, word);
  rep.mode = w_min == 1 ? OracleMode::exact : OracleMode::upper_bound_found;
  rep.weight = weight;
  rep.word = std::move(word);
  return rep;
}

WeightReport enum_report(const CyclicCode& c, const BaseCoords& coords, const std::optional<EnumHit>& hit,
                         std::uint64_t words) {
  if (!hit) return empty_report(words);
  WeightReport rep;
  rep.budget = words;
  rep.word = decode_word(coords, hit->word);
  rep.support = support_of(rep.word);
  if (static_cast<int>(rep.support.size()) != hit->weight) throw std::logic_error("enumeration weight bookkeeping");
  check_classical_witness(c, rep.word);
  rep.mode = OracleMode::exact;
  rep.weight = hit->weight;
  return rep;
}

CssProblem make_css_problem(const CyclicCode& c1, const CyclicCode& c2, const OracleLimits& limits) {
  if (c1.n() != c2.n() || c1.q() != c2.q()) throw DomainError("CSS pair must share length and alphabet");
  if (!code_contains(c1, c2)) throw HypothesisError("C2 is not contained in C1");
  if (c1.dimension() == c2.dimension()) throw HypothesisError("C2 = C1 leaves no logical space");
  const std::int64_t p = as_prime_power(c1.q())->prime;
  const std::size_t dim = static_cast<std::size_t>(as_prime_power(c1.q())->exponent);
  checked_word_count(static_cast<std::uint64_t>(p), dim * static_cast<std::size_t>(c1.dimension()), limits.codewords,
                     "C1");
  checked_word_count(static_cast<std::uint64_t>(p), dim * static_cast<std::size_t>(c1.n() - c2.dimension()),
                     limits.codewords, "dual of C2");

  CssProblem cp{.coords = std::make_shared<const BaseCoords>(*c1.field(), c1.q()), .primal = {}, .dual = {}};
  cp.primal = make_enum_problem(cp.coords, c1.n(), c1.generator(), c2.generator());
  cp.dual = make_enum_problem(cp.coords, c1.n(), dual_generator(c2), dual_generator(c1));
  return cp;
}

WeightReport css_report(const CyclicCode& c1, const CyclicCode& c2, const CssProblem& cp,
                        const std::optional<EnumHit>& primal, const std::optional<EnumHit>& dual) {
  if (!primal || !dual) throw std::logic_error("a proper CSS pair has words on both sides");
  const bool use_dual = dual->weight < primal->weight;
  const EnumHit& hit = use_dual ? *dual : *primal;
  WeightReport rep;
  rep.budget = cp.primal.word_count() + cp.dual.word_count();
  rep.word = decode_word(*cp.coords, hit.word);
  rep.support = support_of(rep.word);
  if (static_cast<int>(rep.support.size()) != hit.weight) throw std::logic_error("enumeration weight bookkeeping");

  const Poly w = as_poly(c1, rep.word);
  if (use_dual) {
    const bool in_dual2 = (w % dual_generator(c2)).is_zero();
    const bool in_dual1 = (w % dual_generator(c1)).is_zero();
    if (!in_dual2 || in_dual1) throw std::logic_error("CSS witness is not in C2^perp minus C1^perp");
    rep.source = "C2perp\\C1perp";
  } else {
    if (!contains_word(c1, w) || contains_word(c2, w)) throw std::logic_error("CSS witness is not in C1 minus C2");
    rep.source = "C1\\C2";
  }
  rep.mode = OracleMode::exact;
  rep.weight = hit.weight;
  return rep;
}

}  // namespace detail

}  // namespace qbch
