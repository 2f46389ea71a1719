#include "cgme/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <unsupported/Eigen/MatrixFunctions>

#include "cgme/effective_hamiltonian.hpp"
#include "cgme/errors.hpp"
#include "cgme/pauli.hpp"

namespace cgme {

namespace {

using cd = std::complex<double>;

Matrix16cd kron16(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
  Matrix16cd out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}

}  // namespace

Vector16cd vec(const Eigen::Matrix4cd& rho) {
  Vector16cd v;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) v(4 * col + row) = rho(row, col);
  return v;
}

Eigen::Matrix4cd unvec(const Vector16cd& v) {
  Eigen::Matrix4cd rho;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) rho(row, col) = v(4 * col + row);
  return rho;
}

GeneratorBundle build_generator(const SystemConfig& cfg, Mode mode, double rel_tol) {
  cfg.validate();
  GeneratorBundle gen;
  gen.cfg = cfg;
  gen.mode = mode;
  gen.h_eff = effective_hamiltonian(cfg, mode, rel_tol);
  gen.kmat = cfg.lambda == 0.0 ? [] {
    KossakowskiMatrix k;
    k.m.setZero();
    return k;
  }()
                               : kossakowski_matrix(cfg, mode, rel_tol);

  const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
  // vec(A X B) = (B^T (x) A) vec(X) for column-major stacking.
  Matrix16cd l = cd(0.0, -1.0) *
                 (kron16(id, gen.h_eff) - kron16(gen.h_eff.transpose(), id));
  for (int alpha = 1; alpha <= 2; ++alpha) {
    for (int beta = 1; beta <= 2; ++beta) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const cd coef = gen.kmat.m(3 * (alpha - 1) + i, 3 * (beta - 1) + j);
          if (coef == cd(0.0, 0.0)) continue;
          const Eigen::Matrix4cd sa = pauli_embed(alpha, i);
          const Eigen::Matrix4cd sb = pauli_embed(beta, j);
          const Eigen::Matrix4cd prod = sa * sb;
          l += coef * (kron16(sa.transpose(), sb) - 0.5 * kron16(id, prod) -
                       0.5 * kron16(prod.transpose(), id));
        }
      }
    }
  }
  gen.liouvillian = l;
  return gen;
}

Eigen::Matrix4cd derivative_at(const GeneratorBundle& gen, const Eigen::Matrix4cd& rho) {
  return unvec(gen.liouvillian * vec(rho));
}

Matrix16cd propagator(const GeneratorBundle& gen, double t) {
  return (gen.liouvillian * t).exp();
}

Matrix16cd choi_matrix(const Matrix16cd& propagator_matrix) {
  Matrix16cd choi;
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      Eigen::Matrix4cd e = Eigen::Matrix4cd::Zero();
      e(k, l) = 1.0;
      const Eigen::Matrix4cd image = unvec(propagator_matrix * vec(e));
      choi.block<4, 4>(4 * k, 4 * l) = image;
    }
  }
  return choi;
}

Trajectory evolve(const GeneratorBundle& gen, const Eigen::Matrix4cd& rho0,
                  double t_max, int n_points) {
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw config_error("evolve: t_max must be finite and > 0");
  if (n_points < 2) throw config_error("evolve: n_points must be >= 2");
  check_two_qubit_state(rho0);

  const double dt = t_max / (n_points - 1);
  const Matrix16cd step = propagator(gen, dt);

  Trajectory traj;
  traj.points.reserve(n_points);
  Vector16cd v = vec(rho0);
  for (int k = 0; k < n_points; ++k) {
    if (k > 0) v = step * v;
    TrajectoryPoint pt;
    pt.t = k * dt;
    pt.rho = unvec(v);
    pt.trace_dev = std::abs(pt.rho.trace() - cd(1.0, 0.0));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(
        0.5 * (pt.rho + pt.rho.adjoint()));
    pt.min_eig = es.eigenvalues().minCoeff();

    if (pt.trace_dev > 1e-9) {
      std::ostringstream msg;
      msg << "evolve: trace drift " << pt.trace_dev << " at t = " << pt.t;
      throw numerics_error(msg.str());
    }
    if (pt.min_eig < -1e-6) {
      std::ostringstream msg;
      msg << "evolve: positivity loss (eigmin " << pt.min_eig << ") at t = " << pt.t;
      throw numerics_error(msg.str());
    }
    if (pt.min_eig < -1e-8) {
      std::ostringstream msg;
      msg << "mild positivity dip (eigmin " << pt.min_eig << ") at t = " << pt.t;
      traj.warnings.push_back(msg.str());
    }
    traj.points.push_back(std::move(pt));
  }
  return traj;
}

}  // namespace cgme
