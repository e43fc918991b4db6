#pragma once

#include <Eigen/Dense>
#include <utility>

namespace entloc {

// Eigenvalues descending, columns of the second element are the matching
// eigenvectors.  Input is symmetrized before the solve.
std::pair<Eigen::VectorXd, Eigen::MatrixXcd> hermitian_eig(
    const Eigen::MatrixXcd& m);

// Principal square root of a PSD Hermitian matrix; eigenvalues below zero are
// clamped (they must sit above -1e-8 or the call throws).
Eigen::MatrixXcd sqrt_psd(const Eigen::MatrixXcd& m);

// Uhlmann fidelity F(rho, sigma) = Tr sqrt(sqrt(rho) sigma sqrt(rho)),
// so F(pure, pure) = |<a|b>|.  Result clamped to [0, 1 + 1e-12].
double fidelity(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);

// Unnormalized trace norm ||a - b||_1 (sum of singular values of the
// difference); orthogonal pure states sit at distance 2.
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

double max_singular_value(const Eigen::MatrixXcd& m);

// Takagi factorization of a complex symmetric matrix: a = U diag(sigma) U^T
// with U unitary and sigma real, nonnegative, descending (the sigma are the
// singular values of a).  Implementation diagonalizes the real symmetric
// embedding [[Re a, Im a], [Im a, -Re a]]; see takagi() in linalg.cpp for the
// degenerate-block handling.
struct TakagiResult {
  Eigen::MatrixXcd u;
  Eigen::VectorXd sigma;
};
TakagiResult takagi(const Eigen::MatrixXcd& a);

}  // namespace entloc
