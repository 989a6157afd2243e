#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qbch/oracle.hpp"
#include "qbch/quantum.hpp"

namespace qbch {

struct VerifyResult {
  bool passed = false;
  std::string status;  // copied into params.checks.oracle
  std::vector<std::pair<std::string, WeightReport>> reports;
};

// Runs the distance oracles on a construction and records what they prove.
//  css: exact quantum distance by enumeration when within budget (sets
//    d_exact); otherwise support search on C1 and C2^perp up to max_weight.
//  hermitian: support search on C up to max_weight; d_exact is set when the
//    minimum-weight witness lies outside the Hermitian dual or meets the
//    quantum Singleton bound.
//  steane: support search on L and L' (classical distances only).
// Fails on a budget overrun or on any word lighter than the designed distance.
VerifyResult verify_distance(Construction& c, int max_weight, const OracleLimits& limits = {});

}  // namespace qbch
