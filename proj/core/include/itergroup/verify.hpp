#pragma once

// Cross-module contract checks with fixed sizes and time limits.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace itergroup {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::vector<int> only;  // empty runs every criterion
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const VerifyOptions& opts);

/// Runs the selected criteria in order; `progress` sees each result as it lands.
std::vector<CriterionResult> run_acceptance(
    const VerifyOptions& opts, const std::function<void(const CriterionResult&)>& progress = {});

/// "PASS  3 name (1.23 s / 60 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace itergroup
