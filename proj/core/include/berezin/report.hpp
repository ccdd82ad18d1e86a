#pragma once

// Named check results shared by the verification suites and the CLI
// reporter. The JSON serialization of CheckResult uses the stable keys
// check, value, reference, sigma_distance, rel_error, pass.

#include <string>
#include <vector>

namespace berezin {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double reference = 0.0;
  // Signed (value - reference) / std_error for Monte-Carlo checks
  // (one-sided bound checks pass iff <= 4); 0 for deterministic checks.
  double sigma_distance = 0.0;
  double rel_error = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

// Two-sided Monte-Carlo agreement check: |value - reference| <= 4 sigma.
// A small absolute floor keeps zero-variance estimates meaningful.
CheckResult sigma_check(std::string name, double value, double reference, double std_error);

// One-sided bound check: value <= reference + 4 sigma.
CheckResult bound_check(std::string name, double value, double reference, double std_error);

// Deterministic threshold check: value <= threshold.
CheckResult threshold_check(std::string name, double value, double threshold);

}  // namespace berezin
