#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbch/cyclic_code.hpp"

namespace qbch {

enum class OracleMode {
  exact,                 // witness at `weight`, every lighter word excluded
  upper_bound_found,     // witness at `weight`, lighter weights not searched
  no_word_below_budget,  // nothing up to the searched weight
  empty_code,            // no nonzero word to find
};

std::string_view mode_name(OracleMode m);

struct WeightReport {
  OracleMode mode = OracleMode::no_word_below_budget;
  std::optional<int> weight;
  std::vector<std::int64_t> support;  // witness positions, ascending
  std::vector<FieldElem> word;        // witness coordinates in the code's field; empty without a witness
  std::uint64_t budget = 0;           // searched weight, or number of words enumerated
  std::string source;                 // which set the witness came from, for CSS
};

// One row per residue z of the full defining set; entry j is alpha^(z*j).
struct ParityCheck {
  std::shared_ptr<const FieldCtx> field;
  std::vector<Residue> residues;
  std::vector<std::vector<FieldElem>> rows;

  bool annihilates(std::span<const FieldElem> word) const;
};

ParityCheck parity_check_rows(const CyclicCode& c);
// Throws DomainError unless alpha has order n in the code's field.
ParityCheck parity_check_rows(const CyclicCode& c, FieldElem alpha);

struct OracleLimits {
  // Roughly: supports tried times the size of each elimination.
  double support_ops = 2e9;
  std::uint64_t codewords = 10'000'000;
};

// Estimated elimination work for min_weight_search over weights w_min..w_max.
double support_search_cost(const CyclicCode& c, int w_min, int w_max);

// Weights w_min..w_max in turn: every support of size w containing position 0
// (enough for a cyclic code) is tested for a nonzero F_q solution of the
// parity checks. Reports the first hit; the lexicographically smallest
// support wins. Throws BudgetExceeded past limits.support_ops.
WeightReport min_weight_search(const CyclicCode& c, int w_max, int w_min = 1, const OracleLimits& limits = {});

// Exact minimum weight over all q^k codewords. Throws BudgetExceeded when
// q^k > limits.codewords.
WeightReport enumerate_min_weight(const CyclicCode& c, const OracleLimits& limits = {});

// min wt over (C1 \ C2) and (C2^perp \ C1^perp), both enumerated in full.
// Requires C2 strictly inside C1.
WeightReport css_distance(const CyclicCode& c1, const CyclicCode& c2, const OracleLimits& limits = {});

// Single-threaded reference versions; same results, same witnesses.
namespace serial {
WeightReport min_weight_search(const CyclicCode& c, int w_max, int w_min = 1, const OracleLimits& limits = {});
WeightReport enumerate_min_weight(const CyclicCode& c, const OracleLimits& limits = {});
WeightReport css_distance(const CyclicCode& c1, const CyclicCode& c2, const OracleLimits& limits = {});
}  // namespace serial

// Hermitian form sum x_i y_i^q against every generator row x^i g(x) of C.
bool in_hermitian_dual(const CyclicCode& c, std::int64_t q, std::span<const FieldElem> word);

}  // namespace qbch
