#pragma once

#include <string>
#include <vector>

namespace dnt {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_delta = 0.0;  // worst observed |difference|
  double tolerance = 0.0;
  std::string detail;      // worst cell, sub-check summary, timings
};

/// Deterministic golden checks of every pipeline stage against the bundled
/// case-study reference data, plus the exclusive-coefficient and worked
/// pair-transformation checks. Each result reports the worst delta at the
/// tolerance it is held to.
std::vector<CheckResult> run_reference_checks();

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace dnt
