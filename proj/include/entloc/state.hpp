#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "entloc/common.hpp"

namespace entloc {

// Qubit indexing is big-endian throughout: qubit 0 is the most significant
// bit of an amplitude index.  |q0 q1 ... q_{n-1}> sits at index
// q0*2^{n-1} + ... + q_{n-1}.

// A sorted, duplicate-free subset of qubit labels inside a register of
// total_qubits qubits.
struct SubsystemMask {
  int total_qubits = 0;
  std::vector<int> members;

  SubsystemMask() = default;
  SubsystemMask(int total, std::vector<int> m);

  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
  bool contains(int q) const;
  SubsystemMask complement() const;
};

class StateVector {
 public:
  StateVector() = default;
  // Validates dimension 2^n and unit norm within 1e-9 (then renormalizes to
  // machine precision).  The all-zero vector is the designated "impossible
  // branch" state and is accepted as-is.
  StateVector(int n_qubits, Eigen::VectorXcd amplitudes);

  static StateVector zero_state(int n_qubits);
  static StateVector basis_state(int n_qubits, std::uint64_t pattern);
  static StateVector ghz(int n_qubits);
  static StateVector w(int n_qubits);
  static StateVector plus(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::int64_t dim() const { return std::int64_t(1) << n_qubits_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  bool is_zero() const { return amps_.squaredNorm() < 1e-20; }

 private:
  int n_qubits_ = 0;
  Eigen::VectorXcd amps_;
};

struct DensityOperator {
  int n_qubits = 0;
  Eigen::MatrixXcd matrix;

  DensityOperator() = default;
  // Validates Hermiticity (1e-10), unit trace (1e-9) and PSD within -1e-10.
  DensityOperator(int n, Eigen::MatrixXcd m);
};

DensityOperator density(const StateVector& psi);

StateVector tensor_product(const StateVector& a, const StateVector& b);

// Reduced state on `keep`, qubits reported in ascending label order.
DensityOperator partial_trace(const StateVector& psi,
                              const SubsystemMask& keep);
DensityOperator partial_trace(const DensityOperator& rho,
                              const SubsystemMask& keep);

// Tr(rho_keep^2) without materializing the larger of the two marginals.
double purity(const StateVector& psi, const SubsystemMask& keep);

// Wootters conjugation in the computational basis:
// tilde(psi) = sigma_y^{tensor n} conj(psi), with sigma_y = [[0,-i],[i,0]],
// i.e. tilde(psi)_i = i^n (-1)^{n - popcount(i)} conj(psi_{~i}).
StateVector wootters_tilde(const StateVector& psi);
DensityOperator wootters_tilde(const DensityOperator& rho);

// In-place single-qubit unitary, u is 2x2.
void apply_single_qubit_unitary(StateVector& psi, int qubit,
                                const Eigen::Matrix2cd& u);

// State JSON format: {"n_qubits": n, "re": [...], "im": [...]} with 2^n
// entries each, amplitude index order as above.
StateVector read_state_json(std::istream& in);
StateVector read_state_json_string(const std::string& text);
std::string write_state_json(const StateVector& psi);

// Bit-scatter table: offsets[x] places the bits of the subset index x at the
// global bit positions of the mask members (member 0 = most significant bit
// of x).  Shared by partial traces, branch extraction and purity sums.
std::vector<std::uint64_t> scatter_offsets(const SubsystemMask& mask);

}  // namespace entloc
