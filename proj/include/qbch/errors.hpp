#pragma once

#include <stdexcept>

namespace qbch {

// An argument is outside an operation's domain (non-prime characteristic,
// gcd(q, n) != 1, division by zero, mismatched fields, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction's hypothesis does not hold for the requested instance.
// The message names the failed hypothesis.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A table or search budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The defining set is all of Z_n, so the code is {0} and has no designed distance.
class ZeroCodeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qbch
