#include "oracle_kernels.hpp"

namespace qbch::serial {

WeightReport min_weight_search(const CyclicCode& c, int w_max, int w_min, const OracleLimits& limits) {
  w_max = detail::prepare_support_search(c, w_min, w_max, limits);
  const detail::BaseCoords coords(*c.field(), c.q());
  if (c.is_zero_code()) return detail::support_report(c, coords, std::nullopt, w_min, w_max);
  const detail::SupportProblem sp = detail::make_support_problem(c);
  std::vector<int> scratch;
  for (int w = w_min; w <= w_max; ++w) {
    std::vector<int> comb(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) comb[static_cast<std::size_t>(i)] = i;
    do {
      if (auto x = detail::solve_support(sp, comb, scratch)) {
        return detail::support_report(c, coords, detail::SupportHit{w, comb, std::move(*x)}, w_min, w_max);
      }
    } while (detail::next_combination(comb, sp.n, 1));
  }
  return detail::support_report(c, coords, std::nullopt, w_min, w_max);
}

WeightReport enumerate_min_weight(const CyclicCode& c, const OracleLimits& limits) {
  const auto pp = as_prime_power(c.q());
  const std::uint64_t words = detail::checked_word_count(
      static_cast<std::uint64_t>(pp->prime), static_cast<std::size_t>(pp->exponent * c.dimension()), limits.codewords,
      "code");
  auto coords = std::make_shared<const detail::BaseCoords>(*c.field(), c.q());
  const detail::EnumProblem ep = detail::make_enum_problem(coords, c.n(), c.generator(), std::nullopt);
  const auto hit = detail::enumerate_block(ep, static_cast<int>(ep.rows.size()), 0);
  return detail::enum_report(c, *coords, hit, words);
}

WeightReport css_distance(const CyclicCode& c1, const CyclicCode& c2, const OracleLimits& limits) {
  const detail::CssProblem cp = detail::make_css_problem(c1, c2, limits);
  const auto primal = detail::enumerate_block(cp.primal, static_cast<int>(cp.primal.rows.size()), 0);
  const auto dual = detail::enumerate_block(cp.dual, static_cast<int>(cp.dual.rows.size()), 0);
  return detail::css_report(c1, c2, cp, primal, dual);
}

}  // namespace qbch::serial
