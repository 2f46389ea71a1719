#pragma once
#include <Eigen/Dense>

#include "cgme/config.hpp"

namespace cgme {

// Environment-induced coherent coupling between the two atoms.  Temperature
// independent; vanishes identically when the separation exceeds the
// coarse-graining window (ell > delta_t).  ell = 0 is rejected: the coupling
// diverges at coincident positions.
struct InducedCoupling {
  double j_plus = 0.0;
  double j_zero = 0.0;
  double err = 0.0;  // quadrature error estimate (exact mode only)
};

InducedCoupling induced_j(const SystemConfig& cfg, Mode mode, double rel_tol = 1e-9);

// 3x3 real coefficient matrix of the induced two-atom term
//   H12 = sum_ij  Hcal_ij  sigma_i (x) sigma_j,
//   Hcal = (cos(theta) delta + sin(theta) eps.n) J+  +  (J0 - cos(theta) J+) n n,
// theta = (omega1 - omega2) delta_t / 2; lambda^2 included.
Eigen::Matrix3d h12_matrix(const SystemConfig& cfg, Mode mode, double rel_tol = 1e-9);

// Full effective Hamiltonian: free part plus the induced coupling term.
// lambda = 0 short-circuits to the free Hamiltonian (no separation checks).
Eigen::Matrix4cd effective_hamiltonian(const SystemConfig& cfg, Mode mode,
                                       double rel_tol = 1e-9);

}  // namespace cgme
