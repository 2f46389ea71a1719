#include "cgme/math.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cgme/quadrature.hpp"

namespace cgme {

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double sinc_prime(double x) {
  const double ax = std::abs(x);
  if (ax < 0.1) {
    // sinc'(x) = -x/3 + x^3/30 - x^5/840 + ...
    const double x2 = x * x;
    return x * (-1.0 / 3.0 + x2 * (1.0 / 30.0 - x2 / 840.0));
  }
  return (std::cos(x) - sinc(x)) / x;
}

double sinc_triple_prime(double x) {
  const double ax = std::abs(x);
  if (ax < 0.1) {
    // sinc'''(x) = x/5 - x^3/42 + x^5/1080 - ...
    const double x2 = x * x;
    return x * (1.0 / 5.0 + x2 * (-1.0 / 42.0 + x2 / 1080.0));
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double x4 = x2 * x2;
  return -c / x + 3.0 * s / x2 + 6.0 * c / x3 - 6.0 * s / x4;
}

double sinc_slope(double x, double y) {
  const double d = x - y;
  if (std::abs(d) < 1e-4) {
    // Symmetric expansion about the midpoint keeps full accuracy as x -> y.
    const double mu = 0.5 * (x + y);
    return sinc_prime(mu) + sinc_triple_prime(mu) * d * d / 24.0;
  }
  return (sinc(x) - sinc(y)) / d;
}

double x_coth_x(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 + x2 / 3.0 - x2 * x2 / 45.0;
  }
  if (2.0 * ax > 700.0) return ax;  // coth saturates; avoid expm1 overflow
  // x coth x = x + 2x / (e^{2x} - 1), even in x.
  return ax + 2.0 * ax / std::expm1(2.0 * ax);
}

double sine_integral(double t) {
  const double at = std::abs(t);
  const double sign = (t < 0.0) ? -1.0 : 1.0;
  if (at <= 12.0) {
    // Si(t) = sum_{k>=0} (-1)^k t^{2k+1} / ((2k+1) (2k+1)!)
    double term = at;      // k = 0 term
    double sum = term;
    for (int k = 0; k < 60; ++k) {
      const double num = -at * at * (2.0 * k + 1.0);
      const double den = (2.0 * k + 3.0) * (2.0 * k + 3.0) * (2.0 * k + 2.0);
      term *= num / den;
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sign * sum;
  }
  if (at <= 1000.0) {
    // Middle range: direct quadrature of sinc — the asymptotic series is not
    // yet accurate enough here and the Taylor series already cancels badly.
    IntegralSpec spec;
    spec.f = [](double u) { return sinc(u); };
    spec.lower = 0.0;
    spec.upper = at;
    spec.rel_tol = 1e-14;
    spec.abs_tol = 1e-15;
    spec.initial_panels = std::max(16, static_cast<int>(at / 3.0));
    return sign * integrate_oracle(spec).value;
  }
  // Asymptotic auxiliary functions f, g:  Si = pi/2 - f cos t - g sin t.
  const double t2 = at * at;
  const double f = (1.0 - 2.0 / t2 + 24.0 / (t2 * t2) - 720.0 / (t2 * t2 * t2)) / at;
  const double g = (1.0 - 6.0 / t2 + 120.0 / (t2 * t2) - 5040.0 / (t2 * t2 * t2)) / t2;
  const double si = std::numbers::pi / 2.0 - f * std::cos(at) - g * std::sin(at);
  return sign * si;
}

}  // namespace cgme
