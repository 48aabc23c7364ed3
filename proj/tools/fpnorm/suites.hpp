#pragma once

#include "report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fpnorm::cli {

struct SuiteConfig {
  std::uint64_t seed = 0;
  /// Closed-form comparisons: interval must contain the value and be this narrow.
  double closed_form_tol = 1e-6;
  /// Isometry checks: intervals must overlap within this.
  double overlap_tol = 1e-7;
};

const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// on an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace fpnorm::cli
