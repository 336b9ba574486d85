#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace homcurv {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Criteria to run; empty means all of 1..12.
  std::vector<int> only;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, std::uint64_t seed = 0);
std::vector<CriterionResult> run_suite(const SuiteOptions& options = {});

/// "[PASS] 3 formula reduction (0.12 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace homcurv
