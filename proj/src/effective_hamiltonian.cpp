#include "cgme/effective_hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include "cgme/errors.hpp"
#include "cgme/math.hpp"
#include "cgme/pauli.hpp"
#include "cgme/quadrature.hpp"

namespace cgme {

namespace {
constexpr double pi = std::numbers::pi;
}

InducedCoupling induced_j(const SystemConfig& cfg, Mode mode, double rel_tol) {
  cfg.validate();
  if (cfg.ell <= 0.0)
    throw config_error("induced coupling is singular at zero separation (ell = 0)");

  const double dt = cfg.delta_t;
  const double ell = cfg.ell;
  InducedCoupling jc;

  if (mode == Mode::exact) {
    const double a = cfg.omega1 * dt / 2.0;
    const double b = cfg.omega2 * dt / 2.0;
    const double c = 2.0 * ell / dt;
    const IntegralResult jp = oracle_pair(PairKernel::cosine, a, b, c, rel_tol);
    const IntegralResult j0 = oracle_pair(PairKernel::cosine, 0.0, 0.0, c, rel_tol);
    jc.j_plus = -jp.value / (4.0 * pi * pi * ell);
    jc.j_zero = -j0.value / (8.0 * pi * pi * ell);
    jc.err = (jp.error + j0.error / 2.0) / (4.0 * pi * pi * ell);
    return jc;
  }

  // Closed forms (temperature independent; valid for all beta).
  if (ell > dt) return jc;  // coupling vanishes outside the window
  const double h = (cfg.omega1 - cfg.omega2) / 2.0;
  const double wbar = (cfg.omega1 + cfg.omega2) / 2.0;
  jc.j_plus = -std::cos(ell * wbar) * (dt - ell) * sinc(h * (dt - ell)) /
              (4.0 * pi * ell * dt);
  jc.j_zero = (1.0 / dt - 1.0 / ell) / (8.0 * pi);
  return jc;
}

Eigen::Matrix3d h12_matrix(const SystemConfig& cfg, Mode mode, double rel_tol) {
  const InducedCoupling jc = induced_j(cfg, mode, rel_tol);
  const double theta = (cfg.omega1 - cfg.omega2) * cfg.delta_t / 2.0;
  const double ct = std::cos(theta), st = std::sin(theta);
  const auto& n = cfg.n;

  Eigen::Matrix3d eps_n = Eigen::Matrix3d::Zero();
  eps_n(0, 1) = n[2];  eps_n(1, 0) = -n[2];
  eps_n(1, 2) = n[0];  eps_n(2, 1) = -n[0];
  eps_n(2, 0) = n[1];  eps_n(0, 2) = -n[1];
  Eigen::Matrix3d nn;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) nn(i, j) = n[i] * n[j];

  Eigen::Matrix3d h = (ct * Eigen::Matrix3d::Identity() + st * eps_n) * jc.j_plus +
                      (jc.j_zero - ct * jc.j_plus) * nn;
  return cfg.lambda * cfg.lambda * h;
}

Eigen::Matrix4cd effective_hamiltonian(const SystemConfig& cfg, Mode mode,
                                       double rel_tol) {
  cfg.validate();
  Eigen::Matrix4cd h = system_hamiltonian(cfg.omega1, cfg.omega2, cfg.n);
  if (cfg.lambda == 0.0) return h;
  const Eigen::Matrix3d h12 = h12_matrix(cfg, mode, rel_tol);
  const auto& s = pauli();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h += h12(i, j) * kron(s[i], s[j]);
  return h;
}

}  // namespace cgme
