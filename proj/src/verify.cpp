#include "qbch/verify.hpp"

#include <stdexcept>

#include "qbch/errors.hpp"

namespace qbch {

namespace {

std::string weight_text(const WeightReport& r, int max_weight) {
  switch (r.mode) {
    case OracleMode::exact:
    case OracleMode::upper_bound_found:
      return "d = " + std::to_string(*r.weight);
    case OracleMode::no_word_below_budget:
      return "d > " + std::to_string(max_weight);
    case OracleMode::empty_code:
      return "no nonzero word";
  }
  return {};
}

// A word lighter than the BCH bound means the arithmetic is wrong somewhere.
bool below_bound(const WeightReport& r, int delta) { return r.weight && *r.weight < delta; }

void verify_classical(VerifyResult& out, const std::string& label, const CyclicCode& c, int max_weight,
                      const OracleLimits& limits) {
  WeightReport r = min_weight_search(c, max_weight, 1, limits);
  if (below_bound(r, c.designed_distance())) {
    out.passed = false;
    out.status += label + " has a word of weight " + std::to_string(*r.weight) + " below delta " +
                  std::to_string(c.designed_distance()) + "; ";
  }
  out.reports.emplace_back(label, std::move(r));
}

void verify_css(Construction& c, VerifyResult& out, int max_weight, const OracleLimits& limits) {
  try {
    WeightReport r = css_distance(c.first, *c.second, limits);
    if (below_bound(r, c.params.d_lower)) {
      out.passed = false;
      out.status = "quantum distance " + std::to_string(*r.weight) + " below d_lower";
    } else {
      record_exact_distance(c.params, *r.weight);
      out.status = "css enumeration: quantum d = " + std::to_string(*r.weight);
    }
    out.reports.emplace_back("quantum", std::move(r));
    return;
  } catch (const BudgetExceeded&) {
  }
  const CyclicCode dual2 = build_code(dual_defining_set(c.second->defining_set()));
  verify_classical(out, "C1", c.first, max_weight, limits);
  verify_classical(out, "C2perp", dual2, max_weight, limits);
  if (!out.passed) return;
  out.status = "support search: C1 " + weight_text(out.reports[0].second, max_weight) + ", C2perp " +
               weight_text(out.reports[1].second, max_weight);
}

void verify_hermitian(Construction& c, VerifyResult& out, int max_weight, const OracleLimits& limits) {
  verify_classical(out, "C", c.first, max_weight, limits);
  if (!out.passed) return;
  const WeightReport& r = out.reports.back().second;
  out.status = "support search: C " + weight_text(r, max_weight);
  if (r.mode != OracleMode::exact) return;
  const bool nontrivial = !in_hermitian_dual(c.first, c.params.q, r.word);
  QuantumParams trial = c.params;
  trial.d_exact = *r.weight;
  const bool at_singleton = singleton_check(trial).slack == 0;
  if (nontrivial || at_singleton) {
    record_exact_distance(c.params, *r.weight);
    out.status += nontrivial ? "; witness outside the Hermitian dual, quantum d = "
                             : "; Singleton bound met, quantum d = ";
    out.status += std::to_string(*r.weight);
  }
}

void verify_steane(Construction& c, VerifyResult& out, int max_weight, const OracleLimits& limits) {
  verify_classical(out, "L", c.first, max_weight, limits);
  verify_classical(out, "L'", *c.second, max_weight, limits);
  if (!out.passed) return;
  out.status = "support search (classical only): L " + weight_text(out.reports[0].second, max_weight) + ", L' " +
               weight_text(out.reports[1].second, max_weight);
}

}  // namespace

VerifyResult verify_distance(Construction& c, int max_weight, const OracleLimits& limits) {
  VerifyResult out;
  out.passed = true;
  try {
    switch (c.scheme) {
      case Scheme::css: verify_css(c, out, max_weight, limits); break;
      case Scheme::hermitian: verify_hermitian(c, out, max_weight, limits); break;
      case Scheme::steane: verify_steane(c, out, max_weight, limits); break;
    }
  } catch (const BudgetExceeded& e) {
    out.passed = false;
    out.status = std::string("not verified: ") + e.what();
  }
  if (!out.passed && out.status.ends_with("; ")) out.status.resize(out.status.size() - 2);
  c.params.checks.oracle = out.status;
  return out;
}

}  // namespace qbch
