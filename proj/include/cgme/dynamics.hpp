#pragma once
#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cgme/config.hpp"
#include "cgme/kossakowski.hpp"

namespace cgme {

using Matrix16cd = Eigen::Matrix<std::complex<double>, 16, 16>;
using Vector16cd = Eigen::Matrix<std::complex<double>, 16, 1>;

// Master-equation generator in GKS-Lindblad form:
//   drho/dt = -i[H_eff, rho]
//             + sum_{ab,ij} C^(ab)_ij ( s^b_j rho s^a_i - {s^a_i s^b_j, rho}/2 )
// assembled as a 16x16 superoperator acting on column-major vec(rho).
struct GeneratorBundle {
  Matrix16cd liouvillian;
  Eigen::Matrix4cd h_eff;
  KossakowskiMatrix kmat;
  Mode mode = Mode::exact;
  SystemConfig cfg;
};

GeneratorBundle build_generator(const SystemConfig& cfg, Mode mode,
                                double rel_tol = 1e-9);

// Column-major stacking and its inverse.
Vector16cd vec(const Eigen::Matrix4cd& rho);
Eigen::Matrix4cd unvec(const Vector16cd& v);

// Right-hand side of the master equation at a given state.
Eigen::Matrix4cd derivative_at(const GeneratorBundle& gen, const Eigen::Matrix4cd& rho);

// exp(L t).
Matrix16cd propagator(const GeneratorBundle& gen, double t);

// Choi matrix of the map rho -> unvec(P vec(rho)); positive semidefinite iff
// the map is completely positive.
Matrix16cd choi_matrix(const Matrix16cd& propagator_matrix);

struct TrajectoryPoint {
  double t = 0.0;
  Eigen::Matrix4cd rho;
  double trace_dev = 0.0;  // |tr(rho) - 1|
  double min_eig = 0.0;    // smallest eigenvalue of the Hermitized state
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  std::vector<std::string> warnings;  // mild positivity dips (< 1e-8)
};

// Evolve rho0 on an equally spaced time grid [0, t_max] with n_points
// samples (including t = 0).  Throws numerics_error on trace drift > 1e-9 or
// an eigenvalue below -1e-6; dips below -1e-8 are recorded as warnings.
Trajectory evolve(const GeneratorBundle& gen, const Eigen::Matrix4cd& rho0,
                  double t_max, int n_points);

}  // namespace cgme
