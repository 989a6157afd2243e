#pragma once

// Shared problem setup for the serial and OpenMP oracle kernels.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qbch/oracle.hpp"

namespace qbch::detail {

// F_q inside a larger field as an F_p space with basis omega^0..omega^(j-1),
// omega the primitive element of F_q. Element codes are sum a_t p^t.
class BaseCoords {
 public:
  BaseCoords(const FieldCtx& field, std::int64_t q);

  int p() const { return p_; }
  int dim() const { return dim_; }
  std::int64_t q() const { return q_; }
  FieldElem basis(int t) const { return basis_[static_cast<std::size_t>(t)]; }

  std::uint16_t code_of(FieldElem e) const;
  FieldElem elem_of(std::uint16_t code) const { return elem_of_code_[code]; }
  std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
    return add_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b];
  }

 private:
  int p_ = 0;
  int dim_ = 0;
  std::int64_t q_ = 0;
  std::int64_t step_ = 0;
  std::vector<FieldElem> basis_;
  std::vector<FieldElem> elem_of_code_;
  std::vector<std::uint16_t> code_of_log_;  // index log/step
  std::vector<std::uint16_t> add_;
};

// Parity checks of one code in F_p coordinates, column per (position, basis index).
struct SupportProblem {
  int n = 0;
  int p = 0;
  int dim = 0;   // F_p dimension of F_q
  int rows = 0;  // coset representatives times the extension degree
  std::vector<std::uint8_t> columns;  // [(pos * dim + t) * rows + r]
  std::vector<int> inverse;           // mod p
};

SupportProblem make_support_problem(const CyclicCode& c);

// Nonzero F_p solution (dim digits per support position) of the checks
// restricted to `support`, or nullopt. The solution is the one with the
// first free column set to 1 and the other free columns 0.
std::optional<std::vector<int>> solve_support(const SupportProblem& sp, std::span<const int> support,
                                              std::vector<int>& scratch);

// Advances a combination of `k` increasing positions below `n`, keeping the
// first `fixed` entries; false when exhausted.
bool next_combination(std::vector<int>& comb, int n, int fixed);

struct SupportHit {
  int weight = 0;
  std::vector<int> support;
  std::vector<int> digits;
};

// F_p span of rows, each a sparse list of (position, code) pairs, with an
// optional linear tag per row. Words with zero tag are skipped.
struct EnumProblem {
  int n = 0;
  int p = 0;
  int tag_len = 0;
  std::shared_ptr<const BaseCoords> coords;
  struct Row {
    std::vector<std::pair<int, std::uint16_t>> entries;
    std::vector<std::pair<int, std::uint16_t>> tag;
  };
  std::vector<Row> rows;  // row d is digit d; digit 0 runs fastest

  std::uint64_t word_count() const;  // p^rows
};

// Rows x^i * gen * omega^t, i < dimension; tags are the same rows reduced mod tag_mod.
EnumProblem make_enum_problem(std::shared_ptr<const BaseCoords> coords, std::int64_t n, const Poly& gen,
                              const std::optional<Poly>& tag_mod);

struct EnumHit {
  int weight = 0;
  std::uint64_t index = 0;     // odometer position of the witness
  std::vector<std::uint16_t> word;
};

// State after adding digit-weighted rows, used to seed a shard.
struct EnumState {
  std::vector<std::uint16_t> word;
  std::vector<std::uint16_t> tag;
  int weight = 0;
  int tag_weight = 0;

  void add_row(const EnumProblem& ep, const EnumProblem::Row& row);
};

// Enumerates odometer indices [first, first + count) where the digits below
// `low_digits` run over all values and the upper digits are fixed by `first`.
std::optional<EnumHit> enumerate_block(const EnumProblem& ep, int low_digits, std::uint64_t first);

std::uint64_t checked_word_count(std::uint64_t p, std::size_t digits, std::uint64_t limit, const char* what);

// Keeps the lighter hit; ties go to the earlier odometer index.
void keep_better(std::optional<EnumHit>& best, std::optional<EnumHit> candidate);

// Argument checks and budget for min_weight_search; returns the clamped w_max.
int prepare_support_search(const CyclicCode& c, int w_min, int w_max, const OracleLimits& limits);

// Turn kernel hits into re-verified reports. Every witness is checked
// against the parity checks, the generator and its own cyclic shift.
WeightReport support_report(const CyclicCode& c, const BaseCoords& coords, const std::optional<SupportHit>& hit,
                            int w_min, int w_max);
WeightReport enum_report(const CyclicCode& c, const BaseCoords& coords, const std::optional<EnumHit>& hit,
                         std::uint64_t words);

struct CssProblem {
  std::shared_ptr<const BaseCoords> coords;
  EnumProblem primal;  // C1, tagged by C2
  EnumProblem dual;    // C2^perp, tagged by C1^perp
};

CssProblem make_css_problem(const CyclicCode& c1, const CyclicCode& c2, const OracleLimits& limits);
WeightReport css_report(const CyclicCode& c1, const CyclicCode& c2, const CssProblem& cp,
                        const std::optional<EnumHit>& primal, const std::optional<EnumHit>& dual);

}  // namespace qbch::detail
