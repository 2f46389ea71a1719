#include "cgme/config.hpp"

#include <cmath>
#include <sstream>

#include "cgme/errors.hpp"

namespace cgme {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::exact: return "exact";
    case Mode::highT: return "highT";
    case Mode::closed: return "closed";
  }
  return "?";
}

Mode mode_from_string(const std::string& s) {
  if (s == "exact") return Mode::exact;
  if (s == "highT") return Mode::highT;
  if (s == "closed") return Mode::closed;
  throw config_error("unknown mode '" + s + "' (expected exact | highT | closed)");
}

void SystemConfig::validate() const {
  std::ostringstream err;
  if (!(omega1 > 0.0) || !std::isfinite(omega1)) err << "omega1 must be finite and > 0; ";
  if (!(omega2 > 0.0) || !std::isfinite(omega2)) err << "omega2 must be finite and > 0; ";
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (std::abs(norm - 1.0) > 1e-12) err << "n must be a unit vector (|n| = " << norm << "); ";
  if (!(ell >= 0.0) || !std::isfinite(ell)) err << "ell must be finite and >= 0; ";
  if (std::isnan(beta) || !(beta > 0.0)) err << "beta must be > 0 (or inf for vacuum); ";
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) err << "lambda must be finite and >= 0; ";
  if (!(delta_t > 0.0) || !std::isfinite(delta_t)) err << "delta_t must be finite and > 0; ";
  if (!std::isfinite(epsilon) || epsilon < 0.0) err << "epsilon must be finite and >= 0; ";
  const std::string msg = err.str();
  if (!msg.empty()) throw config_error("invalid configuration: " + msg);
}

void SystemConfig::require_high_t() const {
  std::ostringstream err;
  if (std::isinf(beta)) err << "hot-bath forms need finite beta; ";
  else if (beta * omega_max() / 2.0 > 1.0)
    err << "hot-bath forms need beta*omega/2 <= 1 (got " << beta * omega_max() / 2.0 << "); ";
  if (ell > delta_t) err << "hot-bath forms need ell <= delta_t; ";
  const std::string msg = err.str();
  if (!msg.empty()) throw config_error("high-temperature preconditions violated: " + msg);
}

}  // namespace cgme
