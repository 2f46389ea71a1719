#pragma once
#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "cgme/config.hpp"

namespace cgme {

// Coarse-grained bath correlation integrals for an atom pair (alpha, beta):
// the thermal spectral density, filtered by the finite-time sinc windows
// centered on the two gap frequencies (i_plus: even part; i_minus: odd part)
// or on zero frequency (i_zero, the dephasing channel).
struct IntegralTriple {
  double i_plus = 0.0;
  double i_minus = 0.0;
  double i_zero = 0.0;
  double err = 0.0;  // summed quadrature error estimates (exact mode only)
};

// UV integration limits for exact mode.  The vacuum-piece cutoff resolves the
// filter sidelobes; the thermal-piece cutoff additionally covers the Bose
// tail (beta*omega = 44 puts the occupation below 1e-19).  Splitting the two
// pieces onto their own symmetric domains keeps the truncated Kossakowski
// matrix positive semidefinite by construction: each piece's matrix-valued
// integrand is pointwise PSD.
struct UvCutoffs {
  double vacuum = 0.0;
  double thermal = 0.0;
};
UvCutoffs uv_cutoffs(const SystemConfig& cfg);

// alpha, beta_idx in {1, 2}; cross-atom pairs pick up the sinc(ell*omega)
// spatial filter.  highT/closed evaluate the hot-bath closed forms instead of
// integrating (require_high_t() applies).
IntegralTriple integral_triple(const SystemConfig& cfg, int alpha, int beta_idx,
                               Mode mode, double rel_tol = 1e-9);

// Rotating-frame phase mixing: C_+/- = I_+/- cos(theta) + i I_-/+ sin(theta),
// theta = (omega_alpha - omega_beta) * delta_t / 2.
std::pair<std::complex<double>, std::complex<double>> c_pm(const IntegralTriple& t,
                                                           double theta);

// 3x3 block:  C_ij = C+ delta_ij - i C- eps_ijk n_k + (C0 - C+) n_i n_j.
Eigen::Matrix3cd block_from_triple(const IntegralTriple& t, double theta,
                                   const std::array<double, 3>& n);

struct KossakowskiMatrix {
  // Indexing: row (alpha-1)*3 + (i-1); lambda^2 already applied.
  Eigen::Matrix<std::complex<double>, 6, 6> m;
  double quad_error = 0.0;

  Eigen::Matrix3cd block(int alpha, int beta_idx) const;
  Eigen::VectorXd eigenvalues() const;   // ascending, real (matrix is Hermitian)
  double min_eigenvalue() const;
};

KossakowskiMatrix kossakowski_matrix(const SystemConfig& cfg, Mode mode,
                                     double rel_tol = 1e-9);

}  // namespace cgme
