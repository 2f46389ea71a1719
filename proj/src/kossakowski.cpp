#include "cgme/kossakowski.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "cgme/errors.hpp"
#include "cgme/math.hpp"
#include "cgme/quadrature.hpp"
#include "cgme/spectral.hpp"

namespace cgme {

namespace {

constexpr double pi = std::numbers::pi;
using cd = std::complex<double>;

// integral over omega of  g(omega) * [sinc(ell w) if cross] * F_a(w) F_b(w),
// times dt/(4 pi), evaluated in dimensionless units x = w dt/2 on [-X, X].
// F_alpha(w) = sinc((w - w_alpha) dt / 2).
double filtered_integral(const std::function<double(double)>& g_of_omega,
                         const SystemConfig& cfg, double wa, double wb, bool cross,
                         double cutoff, double rel_tol, double& err_accum) {
  const double dt = cfg.delta_t;
  const double a = wa * dt / 2.0;
  const double b = wb * dt / 2.0;
  const double c = 2.0 * cfg.ell / dt;
  const double X = cutoff * dt / 2.0;

  IntegralSpec spec;
  spec.f = [&, a, b, c, dt](double x) {
    double v = g_of_omega(2.0 * x / dt) * sinc(x - a) * sinc(x - b);
    if (cross) v *= sinc(c * x);
    return v;
  };
  spec.lower = -X;
  spec.upper = X;
  spec.rel_tol = rel_tol;
  spec.abs_tol = 1e-13;
  const double nu = 2.0 + (cross ? c : 0.0) + 0.5;
  spec.initial_panels =
      std::clamp(static_cast<int>(std::ceil(2.0 * X * nu / (2.0 * pi))), 32, 300000);
  spec.max_evals = 40'000'000;

  const IntegralResult res = integrate_oracle(spec);
  err_accum += res.error / (2.0 * pi);
  return res.value / (2.0 * pi);
}

IntegralTriple exact_triple(const SystemConfig& cfg, double wa, double wb,
                            bool cross, double rel_tol) {
  const UvCutoffs uv = uv_cutoffs(cfg);
  IntegralTriple t;

  auto vac = [](double w) { return vacuum_even(w); };
  auto thermal = [&cfg](double w) { return thermal_even(w, cfg.beta); };
  auto odd = [](double w) { return g_minus(w); };

  t.i_plus = filtered_integral(vac, cfg, wa, wb, cross, uv.vacuum, rel_tol, t.err);
  t.i_zero = filtered_integral(vac, cfg, 0.0, 0.0, cross, uv.vacuum, rel_tol, t.err);
  if (!std::isinf(cfg.beta)) {
    t.i_plus += filtered_integral(thermal, cfg, wa, wb, cross, uv.thermal, rel_tol, t.err);
    t.i_zero += filtered_integral(thermal, cfg, 0.0, 0.0, cross, uv.thermal, rel_tol, t.err);
  }
  t.i_minus = filtered_integral(odd, cfg, wa, wb, cross, uv.vacuum, rel_tol, t.err);
  return t;
}

IntegralTriple hot_triple(const SystemConfig& cfg, double wa, double wb, bool cross) {
  cfg.require_high_t();
  IntegralTriple t;
  const double dt = cfg.delta_t;
  const double ell = cfg.ell;
  const double beta = cfg.beta;
  if (!cross) {
    t.i_plus = 1.0 / (2.0 * pi * beta);
    t.i_zero = t.i_plus;
    t.i_minus = wa / (4.0 * pi);
    return t;
  }
  const double h = (wa - wb) / 2.0;
  const double wbar = (wa + wb) / 2.0;
  const double s1 = sinc(ell * wa / 2.0);
  const double s2 = sinc(ell * wb / 2.0);
  t.i_plus = ((s1 + s2) * std::cos(ell * wbar / 2.0) * (dt - ell / 2.0) *
                  sinc(h * (dt - ell / 2.0)) -
              ell * sinc_slope(ell * wa / 2.0, ell * wb / 2.0) *
                  std::cos(h * (dt - ell / 2.0)) * std::sin(ell * wbar / 2.0)) /
             (4.0 * pi * beta * dt);
  t.i_minus = wbar * (dt - ell) * sinc(h * (dt - ell)) * sinc(ell * wbar) / (4.0 * pi * dt);
  t.i_zero = (2.0 - ell / dt) / (4.0 * pi * beta);
  return t;
}

}  // namespace

UvCutoffs uv_cutoffs(const SystemConfig& cfg) {
  UvCutoffs uv;
  uv.vacuum = 20.0 * cfg.omega_max() + 200.0 * pi / cfg.delta_t;
  uv.thermal = std::isinf(cfg.beta) ? uv.vacuum : std::max(uv.vacuum, 44.0 / cfg.beta);
  return uv;
}

IntegralTriple integral_triple(const SystemConfig& cfg, int alpha, int beta_idx,
                               Mode mode, double rel_tol) {
  cfg.validate();
  if (alpha < 1 || alpha > 2 || beta_idx < 1 || beta_idx > 2)
    throw config_error("integral_triple: atom indices must be 1 or 2");
  const double wa = (alpha == 1) ? cfg.omega1 : cfg.omega2;
  const double wb = (beta_idx == 1) ? cfg.omega1 : cfg.omega2;
  const bool cross = alpha != beta_idx;
  if (mode == Mode::exact) return exact_triple(cfg, wa, wb, cross, rel_tol);
  return hot_triple(cfg, wa, wb, cross);
}

std::pair<cd, cd> c_pm(const IntegralTriple& t, double theta) {
  const double ct = std::cos(theta), st = std::sin(theta);
  return {cd(t.i_plus * ct, t.i_minus * st), cd(t.i_minus * ct, t.i_plus * st)};
}

Eigen::Matrix3cd block_from_triple(const IntegralTriple& t, double theta,
                                   const std::array<double, 3>& n) {
  const auto [cp, cm] = c_pm(t, theta);
  const cd c0(t.i_zero, 0.0);
  Eigen::Matrix3cd eps_n = Eigen::Matrix3cd::Zero();
  eps_n(0, 1) = n[2];  eps_n(1, 0) = -n[2];
  eps_n(1, 2) = n[0];  eps_n(2, 1) = -n[0];
  eps_n(2, 0) = n[1];  eps_n(0, 2) = -n[1];
  Eigen::Matrix3cd nn;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) nn(i, j) = n[i] * n[j];
  const cd im(0.0, 1.0);
  return cp * Eigen::Matrix3cd::Identity() - im * cm * eps_n + (c0 - cp) * nn;
}

Eigen::Matrix3cd KossakowskiMatrix::block(int alpha, int beta_idx) const {
  return m.block<3, 3>(3 * (alpha - 1), 3 * (beta_idx - 1));
}

Eigen::VectorXd KossakowskiMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<cd, 6, 6>> es(m);
  return es.eigenvalues();
}

double KossakowskiMatrix::min_eigenvalue() const { return eigenvalues().minCoeff(); }

KossakowskiMatrix kossakowski_matrix(const SystemConfig& cfg, Mode mode,
                                     double rel_tol) {
  cfg.validate();
  const IntegralTriple t11 = integral_triple(cfg, 1, 1, mode, rel_tol);
  const IntegralTriple t22 = integral_triple(cfg, 2, 2, mode, rel_tol);
  const IntegralTriple t12 = integral_triple(cfg, 1, 2, mode, rel_tol);
  const double theta12 = (cfg.omega1 - cfg.omega2) * cfg.delta_t / 2.0;

  KossakowskiMatrix k;
  k.m.setZero();
  k.m.block<3, 3>(0, 0) = block_from_triple(t11, 0.0, cfg.n);
  k.m.block<3, 3>(3, 3) = block_from_triple(t22, 0.0, cfg.n);
  const Eigen::Matrix3cd c12 = block_from_triple(t12, theta12, cfg.n);
  k.m.block<3, 3>(0, 3) = c12;
  k.m.block<3, 3>(3, 0) = c12.adjoint();
  k.m *= cfg.lambda * cfg.lambda;
  k.quad_error = (t11.err + t22.err + t12.err) * cfg.lambda * cfg.lambda;
  return k;
}

}  // namespace cgme
