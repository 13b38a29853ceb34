#pragma once

#include <string>
#include <vector>

namespace secant::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Counts checked, first counterexample, or elapsed time.
  std::string detail;
};

inline constexpr int kCriterionCount = 11;

/// Runs one acceptance criterion (1..kCriterionCount).
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

/// "[PASS] 05 rank-1 oracle equivalence: ..." style line.
std::string format_line(const CriterionResult& r);

}  // namespace secant::acceptance
