#include <cstdlib>
#include <iostream>

#include "homcurv/suite.hpp"

int main() {
  homcurv::SuiteOptions options;
  if (const char* s = std::getenv("HOMCURV_SEED")) options.seed = std::strtoull(s, nullptr, 10);
  int failed = 0;
  options.on_result = [&](const homcurv::CriterionResult& r) {
    std::cout << homcurv::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  };
  homcurv::run_suite(options);
  std::cout << (homcurv::kCriterionCount - failed) << "/" << homcurv::kCriterionCount
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
