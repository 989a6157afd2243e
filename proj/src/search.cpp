#include "qbch/search.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

#include "qbch/errors.hpp"

namespace qbch {

namespace {

GeneratorArgs point(Family f, std::int64_t q, std::int64_t n) {
  GeneratorArgs a;
  a.family = f;
  a.q = q;
  a.n = n;
  return a;
}

// Largest r worth trying when each step costs `per_step` dimensions.
std::int64_t r_limit(std::int64_t n, std::int64_t per_step) { return per_step > 0 ? n / per_step : 0; }

void add_points(std::vector<GeneratorArgs>& out, Family f, std::int64_t q, std::int64_t n) {
  const bool prime = is_prime(n);
  const bool coprime = std::gcd(q, n) == 1;
  switch (f) {
    case Family::css_I:
      if (coprime && n > q && n % (q - 1) == 0) {
        for (int c = 2; c <= n / (q - 1); ++c) {
          auto a = point(f, q, n);
          a.c = c;
          out.push_back(a);
        }
      }
      break;
    case Family::css_II:
    case Family::steane_III:
      if (prime && n > q) {
        const std::int64_t m = mult_order(n, q);
        for (int r = f == Family::css_II ? 1 : 2; r <= r_limit(n, 2 * m) + 1; ++r) {
          auto a = point(f, q, n);
          a.r = r;
          out.push_back(a);
        }
      }
      if (f == Family::steane_III && coprime && n > q && n % (q - 1) == 0) {
        for (int c = 1; c <= n / (q - 1) - 3; ++c) {
          auto a = point(f, q, n);
          a.c = c;
          out.push_back(a);
        }
      }
      break;
    case Family::hermitian_IV: {
      const std::int64_t q2 = q * q;
      if (std::gcd(q2, n) != 1) break;
      if (n > q2 && n % (q2 - 1) == 0) {
        for (int c = 2; c <= n / (q2 - 1) - 2; ++c) {
          auto a = point(f, q, n);
          a.c = c;
          out.push_back(a);
        }
      }
      if (prime) {
        const std::int64_t m = mult_order(n, q2);
        for (int r = 1; r <= r_limit(n, 2 * m) + 1; ++r) {
          auto a = point(f, q, n);
          a.r = r;
          out.push_back(a);
        }
      }
      break;
    }
    case Family::manual:
      break;
  }
}

}  // namespace

std::vector<GeneratorArgs> search_points(const SearchSpec& spec) {
  if (spec.n_min < 2 || spec.n_max < spec.n_min) throw DomainError("search needs 2 <= n_min <= n_max");
  if (spec.n_max > kSearchMaxLength) {
    throw DomainError("search length cap is " + std::to_string(kSearchMaxLength));
  }
  std::vector<Family> families = spec.families;
  if (families.empty()) families = {Family::css_I, Family::css_II, Family::steane_III, Family::hermitian_IV};
  std::vector<GeneratorArgs> out;
  for (std::int64_t q : spec.qs) {
    if (!as_prime_power(q)) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
    for (std::int64_t n = spec.n_min; n <= spec.n_max; ++n) {
      for (Family f : families) {
        add_points(out, f, q, n);
        if (static_cast<std::int64_t>(out.size()) > kSearchMaxPoints) {
          throw DomainError("search grid exceeds " + std::to_string(kSearchMaxPoints) + " points");
        }
      }
    }
  }
  return out;
}

SearchOutcome run_search(const SearchSpec& spec) {
  const std::vector<GeneratorArgs> points = search_points(spec);
  std::vector<std::optional<QuantumParams>> found(points.size());
  std::vector<std::string> why(points.size());

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      found[i] = generate(points[i]).params;
    } catch (const std::exception& e) {
      why[i] = points[i].describe() + ": " + e.what();
    }
  }

  SearchOutcome out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (found[i]) {
      out.records.push_back(std::move(*found[i]));
    } else {
      out.diagnostics.push_back(std::move(why[i]));
    }
  }
  std::stable_sort(out.records.begin(), out.records.end(), [](const QuantumParams& a, const QuantumParams& b) {
    return std::tuple(a.q, a.n, -a.k, static_cast<int>(a.family), a.construction) <
           std::tuple(b.q, b.n, -b.k, static_cast<int>(b.family), b.construction);
  });
  return out;
}

}  // namespace qbch
