#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbch/quantum.hpp"

namespace qbch {

inline constexpr std::int64_t kSearchMaxLength = 2000;
inline constexpr std::int64_t kSearchMaxPoints = 200000;

struct SearchSpec {
  std::vector<std::int64_t> qs;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  std::vector<Family> families;  // empty means the four named families
};

struct SearchOutcome {
  std::vector<QuantumParams> records;    // sorted by q, n, then K descending
  std::vector<std::string> diagnostics;  // one line per rejected grid point
};

// Every (family, q, n, parameter) point of the right shape: css-I c = 2..r,
// css-II r >= 1 and steane-III r >= 2 on prime n, steane-III c on
// n = r(q-1), hermitian-IV c on n = r(q^2-1) and r >= 1 on prime n.
// Throws DomainError when the grid exceeds the caps above.
std::vector<GeneratorArgs> search_points(const SearchSpec& spec);

SearchOutcome run_search(const SearchSpec& spec);

}  // namespace qbch
