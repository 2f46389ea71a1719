#pragma once
#include <complex>

namespace cgme {

// Fourier transform of the thermal Wightman function of a massless scalar
// field at inverse temperature beta, same-point (single-atom) version:
//   G(omega) = (1/2pi) [ omega/2 + (1/beta) * (beta omega/2) coth(beta omega/2) ]
// beta = +inf gives the vacuum limit: omega/(2pi) for omega > 0, else 0.
double g_fourier(double omega, double beta);

// Even / odd combinations used by the Kossakowski integrals:
//   g_plus  = G(omega) + G(-omega) = x_coth_x(beta omega/2) / (pi beta)
//   g_minus = G(omega) - G(-omega) = omega / (2 pi)            (any beta)
double g_plus(double omega, double beta);
double g_minus(double omega);

// Decomposition of g_plus into a temperature-independent vacuum part and a
// Bose-occupation part (both even in omega):
//   vacuum_even  = |omega| / (2 pi)
//   thermal_even = (|omega| / pi) * n_B(|omega|),  n_B = 1/(e^{beta|w|}-1)
// The two pieces get different UV cutoffs in the exact-mode quadrature.
double vacuum_even(double omega);
double thermal_even(double omega, double beta);

// Cross-atom spectral factor: the two-point Wightman transform equals the
// same-point one times sinc(ell * omega).
double cross_filter(double omega, double ell);

// Even part (in omega) of the odd-frequency Hilbert-transform kernel that
// drives the induced coherent coupling between the atoms.  Exact at any
// temperature: -i cos(ell omega) / (2 pi ell).
std::complex<double> k12_even(double omega, double ell);

}  // namespace cgme
