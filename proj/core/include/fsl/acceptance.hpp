#pragma once

// The certification battery: each criterion pins an expected value or
// tolerance in code and carries a wall-clock limit.

#include <iosfwd>
#include <string>
#include <vector>

namespace fsl::acceptance {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;  // nonempty on failure
};

// Runs every criterion, streaming one pass/fail line per criterion.
std::vector<CriterionResult> run_all(std::ostream& progress);

bool all_pass(const std::vector<CriterionResult>& rs);

}  // namespace fsl::acceptance
