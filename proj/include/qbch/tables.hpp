#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbch/quantum.hpp"
#include "qbch/verify.hpp"

namespace qbch {

struct TableRow {
  int table = 0;
  GeneratorArgs args;
  std::int64_t n = 0;
  std::int64_t k = 0;
  int d = 0;
  bool mds = false;
  std::string reference;  // literature column, reproduced as static data
  std::optional<int> verify_weight;  // oracle run when regenerating, if set
};

// Rows of tables 1..4; throws DomainError for any other id.
const std::vector<TableRow>& table_rows(int id);

struct RowResult {
  TableRow row;
  std::optional<Construction> built;
  std::optional<VerifyResult> verified;
  bool matched = false;
  std::string problem;
};

// Regenerates every row. A row matches when n and K agree exactly, the
// designed distance reaches the tabulated d, and, for MDS rows, the oracle
// (or the Singleton bound at the designed distance for Steane rows)
// confirms d.
std::vector<RowResult> regenerate_table(int id, bool run_oracle = true);

}  // namespace qbch
