#pragma once

#include <string>
#include <vector>

#include "engel/report.hpp"

namespace engel::ver {

struct SuiteOptions {
  unsigned seed = 0;
  bool parallel = true;
  int samples = 100;  // sampled y per algebra in the equivalence suites
};

// Named verification bundles, one per checked statement. The aggregated
// report's verdict is pass/fail (experimental-pass/-fail for the open
// conjecture suites); details.items holds one entry per model.
rpt::Report run_suite(const std::string& name, const SuiteOptions& opts = {});
std::vector<std::string> suite_names();

}  // namespace engel::ver
