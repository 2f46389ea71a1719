#include "cgme/pauli.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "cgme/errors.hpp"

namespace cgme {

namespace {
constexpr cd I{0.0, 1.0};
}

const std::array<Eigen::Matrix2cd, 3>& pauli() {
  static const std::array<Eigen::Matrix2cd, 3> s = [] {
    std::array<Eigen::Matrix2cd, 3> p;
    p[0] << 0, 1, 1, 0;
    p[1] << 0, -I, I, 0;
    p[2] << 1, 0, 0, -1;
    return p;
  }();
  return s;
}

Eigen::Matrix2cd pauli_dot(const std::array<double, 3>& n) {
  const auto& s = pauli();
  return n[0] * s[0] + n[1] * s[1] + n[2] * s[2];
}

Eigen::Matrix4cd pauli_embed(int atom, int i) {
  const auto& s = pauli();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  return atom == 1 ? kron(s[i], id) : kron(id, s[i]);
}

Eigen::Matrix4cd system_hamiltonian(double omega1, double omega2,
                                    const std::array<double, 3>& n) {
  const Eigen::Matrix2cd ns = pauli_dot(n);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  return 0.5 * omega1 * kron(ns, id) + 0.5 * omega2 * kron(id, ns);
}

PsiTensor psi_tensor(const std::array<double, 3>& n) {
  PsiTensor t;
  Eigen::Matrix3cd nn;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) nn(i, j) = n[i] * n[j];
  Eigen::Matrix3cd eps_n = Eigen::Matrix3cd::Zero();  // (eps_n)_ij = eps_ijk n_k
  eps_n(0, 1) = n[2];  eps_n(1, 0) = -n[2];
  eps_n(1, 2) = n[0];  eps_n(2, 1) = -n[0];
  eps_n(2, 0) = n[1];  eps_n(0, 2) = -n[1];
  const Eigen::Matrix3cd id = Eigen::Matrix3cd::Identity();
  t.zero = nn;
  t.plus = 0.5 * (id - nn + I * eps_n);
  t.minus = 0.5 * (id - nn - I * eps_n);
  return t;
}

Eigen::Vector2cd spin_state(const std::array<double, 3>& n, int sign) {
  const double nx = n[0], ny = n[1], nz = n[2];
  Eigen::Vector2cd v;
  // Branch on which pole is closer to avoid cancellation near n = -/+ z.
  if (sign > 0) {
    if (1.0 + nz >= 1.0 - nz)
      v << cd(1.0 + nz, 0.0), cd(nx, ny);
    else
      v << cd(nx, -ny), cd(1.0 - nz, 0.0);
  } else {
    if (1.0 + nz >= 1.0 - nz)
      v << cd(nx, -ny), cd(-(1.0 + nz), 0.0);
    else
      v << cd(-(1.0 - nz), 0.0), cd(nx, ny);
  }
  v.normalize();
  // Phase fix: first nonzero component real and positive.
  for (int i = 0; i < 2; ++i) {
    if (std::abs(v(i)) > 1e-14) {
      v *= std::conj(v(i)) / std::abs(v(i));
      break;
    }
  }
  return v;
}

Eigen::Vector2cd orthocomplement(const Eigen::Vector2cd& v) {
  Eigen::Vector2cd w;
  w << -std::conj(v(1)), std::conj(v(0));
  for (int i = 0; i < 2; ++i) {
    if (std::abs(w(i)) > 1e-14) {
      w *= std::conj(w(i)) / std::abs(w(i));
      break;
    }
  }
  return w;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

void check_two_qubit_state(const Eigen::Matrix4cd& rho) {
  std::ostringstream err;
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) err << "not Hermitian (max dev " << herm << "); ";
  const double tr_dev = std::abs(rho.trace() - cd(1.0, 0.0));
  if (tr_dev > 1e-12) err << "trace != 1 (dev " << tr_dev << "); ";
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(0.5 * (rho + rho.adjoint()));
  const double eig_min = es.eigenvalues().minCoeff();
  if (eig_min < -1e-10) err << "not positive semidefinite (eigmin " << eig_min << "); ";
  const std::string msg = err.str();
  if (!msg.empty()) throw config_error("invalid density matrix: " + msg);
}

}  // namespace cgme
