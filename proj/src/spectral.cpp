#include "cgme/spectral.hpp"

#include <cmath>
#include <numbers>

#include "cgme/errors.hpp"
#include "cgme/math.hpp"

namespace cgme {

namespace {
constexpr double pi = std::numbers::pi;
}

double g_fourier(double omega, double beta) {
  if (std::isinf(beta)) return omega > 0.0 ? omega / (2.0 * pi) : 0.0;
  return (omega / 2.0 + x_coth_x(beta * omega / 2.0) / beta) / (2.0 * pi);
}

double g_plus(double omega, double beta) {
  if (std::isinf(beta)) return std::abs(omega) / (2.0 * pi);
  return x_coth_x(beta * omega / 2.0) / (pi * beta);
}

double g_minus(double omega) { return omega / (2.0 * pi); }

double vacuum_even(double omega) { return std::abs(omega) / (2.0 * pi); }

double thermal_even(double omega, double beta) {
  if (std::isinf(beta)) return 0.0;
  const double aw = std::abs(omega);
  const double x = beta * aw;
  if (x > 700.0) return 0.0;
  if (x < 1e-12) return 1.0 / (pi * beta);  // |w| n_B(|w|) -> 1/beta
  return (aw / pi) / std::expm1(x);
}

double cross_filter(double omega, double ell) { return sinc(ell * omega); }

std::complex<double> k12_even(double omega, double ell) {
  if (ell <= 0.0)
    throw config_error("k12_even: coupling kernel is singular at zero separation");
  return std::complex<double>(0.0, -std::cos(ell * omega) / (2.0 * pi * ell));
}

}  // namespace cgme
