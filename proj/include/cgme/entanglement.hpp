#pragma once
#include <Eigen/Dense>
#include <string>

#include "cgme/config.hpp"

namespace cgme {

// Partial transpose on the second atom:
// out(2i+k, 2j+l) = rho(2i+l, 2j+k).
Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho);

// Sum of |negative eigenvalues| of the partial transpose; > 0 iff entangled
// (two qubits).
double negativity(const Eigen::Matrix4cd& rho);

// Bloch-vector probe pairs entering the entanglement-generation criterion:
//   u_i = <phi_perp| sigma_i |phi>,   v_i = <psi| sigma_i |psi_perp>
// for a product initial state |phi> (x) |psi>.
struct ProbeVectors {
  Eigen::Vector3cd u, v;
  Eigen::Vector2cd phi_perp, psi_perp;
};
ProbeVectors probe_vectors(const Eigen::Vector2cd& phi, const Eigen::Vector2cd& psi);

// One evaluated criterion: entanglement is generated at first order iff
// rhs > lhs (margin() > 0).
struct CriterionReport {
  std::string criterion_id;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double diss_part = 0.0;  // |<u| Re C12 |v>|^2      (full criterion only)
  double ham_part = 0.0;   // |<u| i H12 |v>|^2       (full criterion only)
  SystemConfig cfg;
  Mode mode = Mode::exact;
  std::string note;

  double margin() const { return rhs - lhs; }
};

// General first-order criterion from the Kossakowski blocks and the induced
// coupling:  lhs = Re<u|C11|u> * Re<v|C22^T|v>,
//            rhs = |<u| (Re C12 + i H12) |v>|^2.
CriterionReport criterion_full(const SystemConfig& cfg, const Eigen::Vector3cd& u,
                               const Eigen::Vector3cd& v, Mode mode,
                               double rel_tol = 1e-9);

// Same, with the canonical probes built from the n.sigma eigenstates
// phi = |n;->, psi = |n;+>.
CriterionReport criterion_full(const SystemConfig& cfg, Mode mode,
                               double rel_tol = 1e-9);

// Hot-bath closed-form criterion (beta*omega/2 <= 1, ell <= delta_t).
CriterionReport criterion_high_t(const SystemConfig& cfg);

// Equal-frequency, long-window limit (omega1 = omega2, delta_t -> infinity).
CriterionReport criterion_equal(const SystemConfig& cfg);

// Small-separation expansion of the hot-bath criterion (ell << delta_t).
CriterionReport criterion_small_l(const SystemConfig& cfg);

// Long-window criterion at arbitrary temperature (delta_t -> infinity).
CriterionReport criterion_large_dt(const SystemConfig& cfg);

// d/dt at t = 0 of the entanglement witness <chi| (PT rho) |chi> for a probe
// vector chi orthogonal to the PT of the initial product state; negative
// values signal entanglement generation.  Throws config_error if chi fails
// the orthogonality precondition (|<chi|PT(rho0)|chi>| > 1e-8).
double da_dt0(const SystemConfig& cfg, const Eigen::Matrix4cd& rho0,
              const Eigen::Vector4cd& chi, Mode mode, double rel_tol = 1e-9);

}  // namespace cgme
