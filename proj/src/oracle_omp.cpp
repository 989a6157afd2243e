#include <atomic>

#include "oracle_kernels.hpp"

namespace qbch {

namespace {

// Shards by the second support position (the first is always 0). The
// smallest shard with a hit holds the lexicographically first support.
std::optional<detail::SupportHit> search_weight(const detail::SupportProblem& sp, int w) {
  if (w == 1) {
    std::vector<int> scratch;
    const std::vector<int> comb{0};
    if (auto x = detail::solve_support(sp, comb, scratch)) return detail::SupportHit{1, comb, std::move(*x)};
    return std::nullopt;
  }
  const int shards = sp.n - w + 1;
  std::vector<std::optional<detail::SupportHit>> hits(static_cast<std::size_t>(shards));
  std::atomic<int> first_hit{shards + 1};

#pragma omp parallel for schedule(dynamic)
  for (int second = 1; second <= shards; ++second) {
    if (second > first_hit.load(std::memory_order_relaxed)) continue;
    std::vector<int> scratch;
    std::vector<int> comb(static_cast<std::size_t>(w));
    comb[0] = 0;
    for (int i = 1; i < w; ++i) comb[static_cast<std::size_t>(i)] = second + i - 1;
    do {
      if (auto x = detail::solve_support(sp, comb, scratch)) {
        hits[static_cast<std::size_t>(second - 1)] = detail::SupportHit{w, comb, std::move(*x)};
        int seen = first_hit.load(std::memory_order_relaxed);
        while (second < seen && !first_hit.compare_exchange_weak(seen, second)) {
        }
        break;
      }
      if (second > first_hit.load(std::memory_order_relaxed)) break;
    } while (detail::next_combination(comb, sp.n, 2));
  }

  for (auto& h : hits) {
    if (h) return std::move(h);
  }
  return std::nullopt;
}

// Fixes the top digits per shard so the serial odometer order is the shard order.
std::optional<detail::EnumHit> enumerate_parallel(const detail::EnumProblem& ep) {
  const int digits = static_cast<int>(ep.rows.size());
  int top = 0;
  std::uint64_t shards = 1;
  while (top < digits && shards * static_cast<std::uint64_t>(ep.p) <= 1024) {
    shards *= static_cast<std::uint64_t>(ep.p);
    ++top;
  }
  const int low = digits - top;
  const std::uint64_t block = ep.word_count() / shards;
  std::vector<std::optional<detail::EnumHit>> hits(shards);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(shards); ++s) {
    hits[static_cast<std::size_t>(s)] = detail::enumerate_block(ep, low, static_cast<std::uint64_t>(s) * block);
  }

  std::optional<detail::EnumHit> best;
  for (auto& h : hits) detail::keep_better(best, std::move(h));
  return best;
}

}  // namespace

WeightReport min_weight_search(const CyclicCode& c, int w_max, int w_min, const OracleLimits& limits) {
  w_max = detail::prepare_support_search(c, w_min, w_max, limits);
  const detail::BaseCoords coords(*c.field(), c.q());
  if (c.is_zero_code()) return detail::support_report(c, coords, std::nullopt, w_min, w_max);
  const detail::SupportProblem sp = detail::make_support_problem(c);
  for (int w = w_min; w <= w_max; ++w) {
    if (auto hit = search_weight(sp, w)) return detail::support_report(c, coords, hit, w_min, w_max);
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
  return detail::enum_report(c, *coords, enumerate_parallel(ep), words);
}

WeightReport css_distance(const CyclicCode& c1, const CyclicCode& c2, const OracleLimits& limits) {
  const detail::CssProblem cp = detail::make_css_problem(c1, c2, limits);
  const auto primal = enumerate_parallel(cp.primal);
  const auto dual = enumerate_parallel(cp.dual);
  return detail::css_report(c1, c2, cp, primal, dual);
}

}  // namespace qbch
