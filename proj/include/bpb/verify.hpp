#pragma once

#include <string>
#include <vector>

#include "bpb/config.hpp"

namespace bpb {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  /// Measured deviation (or margin) and the tolerance it is compared with.
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Suites: sharpness, hilbert, alpha, nonsquare, all. Throws Error(Parse)
/// for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const EstimatorConfig& config);

}  // namespace bpb
