#pragma once
#include <Eigen/Dense>
#include <array>
#include <complex>

namespace cgme {

using cd = std::complex<double>;

// The Pauli triple (sigma_1, sigma_2, sigma_3).
const std::array<Eigen::Matrix2cd, 3>& pauli();

// n . sigma for a real 3-vector n.
Eigen::Matrix2cd pauli_dot(const std::array<double, 3>& n);

// sigma_i acting on atom 1 or 2 of the pair Hilbert space:
// atom = 1 -> sigma_i (x) I,  atom = 2 -> I (x) sigma_i.  i in {0,1,2}.
Eigen::Matrix4cd pauli_embed(int atom, int i);

// Free two-atom Hamiltonian (omega1/2) n.sigma (x) I + (omega2/2) I (x) n.sigma.
Eigen::Matrix4cd system_hamiltonian(double omega1, double omega2,
                                    const std::array<double, 3>& n);

// Projector-valued decomposition of 3x3 tensors built from a unit vector n:
//   psi0_ij    = n_i n_j
//   psiplus_ij = (delta_ij - n_i n_j + i eps_ijk n_k) / 2
//   psiminus_ij= (delta_ij - n_i n_j - i eps_ijk n_k) / 2
// These are mutually orthogonal Hermitian projectors summing to the identity.
struct PsiTensor {
  Eigen::Matrix3cd zero;
  Eigen::Matrix3cd plus;
  Eigen::Matrix3cd minus;
};
PsiTensor psi_tensor(const std::array<double, 3>& n);

// Eigenstate of n.sigma with eigenvalue sign (= +1 or -1), phase-fixed so the
// first nonzero component in the sigma_3 basis is real and positive.
Eigen::Vector2cd spin_state(const std::array<double, 3>& n, int sign);

// Unit vector orthogonal to v (2d), same phase fixing as spin_state.
Eigen::Vector2cd orthocomplement(const Eigen::Vector2cd& v);

// Kronecker product of two 2x2 blocks (atom-1 factor first).
Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

// Throws config_error unless rho is Hermitian (1e-12), unit trace (1e-12)
// and positive semidefinite (eigmin >= -1e-10).
void check_two_qubit_state(const Eigen::Matrix4cd& rho);

}  // namespace cgme
