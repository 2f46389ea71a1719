#pragma once
#include <cmath>

// Small scalar helpers shared across the spectral / filter-function code.
// Every function here is safe at and near its removable singularity.

namespace cgme {

// sin(x)/x with series continuation at the origin.
double sinc(double x);

// d/dx sinc(x).
double sinc_prime(double x);

// Third derivative of sinc; needed for the stable symmetric-difference form
// of sinc_slope below.
double sinc_triple_prime(double x);

// (sinc(x) - sinc(y)) / (x - y), stable as x -> y.
double sinc_slope(double x, double y);

// x * coth(x) with series continuation at the origin; -> |x| for large |x|.
double x_coth_x(double x);

// Sine integral Si(t) = \int_0^t sin(u)/u du.  Series for small t,
// asymptotic expansion for large t; absolute accuracy ~1e-12.
double sine_integral(double t);

}  // namespace cgme
