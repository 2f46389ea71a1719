#pragma once
#include <stdexcept>
#include <string>

namespace cgme {

// Validation / precondition failures (CLI exit code 2).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical contract violations: positivity loss, trace drift, quadrature
// breakdown (CLI exit code 3).
struct numerics_error : std::runtime_error {
  explicit numerics_error(const std::string& what) : std::runtime_error(what) {}
};

// Closed form vs. oracle mismatch that is not listed in the discrepancy
// registry (CLI exit code 4).
struct discrepancy_error : std::runtime_error {
  explicit discrepancy_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cgme
