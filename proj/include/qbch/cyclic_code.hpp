#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "qbch/cyclotomic.hpp"
#include "qbch/fields.hpp"
#include "qbch/poly.hpp"

namespace qbch {

// A union of complete q-ary cosets mod n.
struct DefiningSet {
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::vector<Residue> residues;    // sorted
  std::vector<Residue> coset_reps;  // minimum element of each coset, sorted

  // Union of the cosets of the given residues. Throws DomainError when two
  // of them name the same or overlapping cosets.
  static DefiningSet from_cosets(std::int64_t q, std::int64_t n, std::span<const Residue> reps);
  // Throws DomainError unless `residues` is closed under multiplication by q.
  static DefiningSet from_residues(std::int64_t q, std::int64_t n, std::span<const Residue> residues);

  std::size_t size() const { return residues.size(); }
  bool contains(Residue r) const;
  bool is_subset_of(const DefiningSet& other) const;

  friend bool operator==(const DefiningSet&, const DefiningSet&) = default;
};

struct DesignedDistance {
  int delta = 1;
  Residue start = 0;  // first element of the longest cyclic run in Z
};

// delta = 1 + longest run of cyclically consecutive residues in Z, ties to the
// smallest start. Throws ZeroCodeError for Z = Z_n.
DesignedDistance bch_designed_distance(const DefiningSet& z);

// Defining set of the Euclidean dual: Z_n minus -Z.
DefiningSet dual_defining_set(const DefiningSet& z);

// Z and -Z are disjoint.
bool is_euclidean_dual_containing(const DefiningSet& z);
// For a code over F_{q^2}: Z and -qZ are disjoint. `z.q` must equal q^2.
bool is_hermitian_dual_containing(const DefiningSet& z, std::int64_t q);

// F_{q^m} with m = ord_n(q), the smallest field holding the n-th roots of unity.
std::shared_ptr<const FieldCtx> splitting_field(std::int64_t q, std::int64_t n);

// prod_{i in coset} (x - alpha^i); every coefficient is checked to lie in F_q.
Poly minimal_polynomial(const std::shared_ptr<const FieldCtx>& field, FieldElem alpha, const Coset& coset,
                        std::int64_t q);

// Cyclic code of length n over F_q given by its defining set.
class CyclicCode {
 public:
  std::int64_t n() const { return z_.n; }
  std::int64_t q() const { return z_.q; }
  const DefiningSet& defining_set() const { return z_; }
  const Poly& generator() const { return g_; }
  std::int64_t dimension() const { return n() - static_cast<std::int64_t>(z_.size()); }
  // BCH designed distance; n + 1 for the zero code, which has no nonzero words.
  int designed_distance() const { return delta_; }
  Residue run_start() const { return run_start_; }
  bool is_zero_code() const { return dimension() == 0; }

  const std::shared_ptr<const FieldCtx>& field() const { return g_.field_ptr(); }
  // Primitive n-th root of unity used for the defining set.
  FieldElem alpha() const { return alpha_; }

 private:
  friend CyclicCode build_code(const DefiningSet& z);
  CyclicCode(DefiningSet z, Poly g, FieldElem alpha, int delta, Residue start)
      : z_(std::move(z)), g_(std::move(g)), alpha_(alpha), delta_(delta), run_start_(start) {}

  DefiningSet z_;
  Poly g_;
  FieldElem alpha_;
  int delta_;
  Residue run_start_;
};

CyclicCode build_code(const DefiningSet& z);
// Code whose defining set is the union of the cosets of `reps`.
CyclicCode build_code(std::int64_t q, std::int64_t n, std::span<const Residue> reps);

// C2 is a subcode of C1: g1 | g2, cross-checked against Z1 being a subset of Z2.
bool code_contains(const CyclicCode& c1, const CyclicCode& c2);

// Generator of the Euclidean dual: the monic reciprocal of h = (x^n - 1)/g.
Poly dual_generator(const CyclicCode& c);
// Membership of a word of degree < n by remainder modulo g.
bool contains_word(const CyclicCode& c, const Poly& word);
// C^perp is inside C, decided by polynomial division (independent of the
// defining-set predicate).
bool euclidean_dual_contained_by_division(const CyclicCode& c);
// Same for the Hermitian dual of a code over F_{q^2}: the conjugated dual
// generator must be a codeword.
bool hermitian_dual_contained_by_division(const CyclicCode& c, std::int64_t q);

}  // namespace qbch
