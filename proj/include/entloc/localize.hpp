#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "entloc/measures.hpp"
#include "entloc/pso.hpp"
#include "entloc/state.hpp"

namespace entloc {

// One (theta, phi) pair per measured qubit, in mask member order.  The
// measured basis on each qubit is
//   |v>  = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
//   |v_> = sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>
// theta in [0, pi], phi in [0, 2pi).
struct LocalBasisParams {
  std::vector<std::array<double, 2>> angles;
};

// Columns are the measurement basis vectors on H_A.
struct GlobalBasis {
  Eigen::MatrixXcd columns;
};

struct Ensemble {
  struct Branch {
    double probability = 0.0;
    StateVector state;  // zero vector when probability < 1e-14
  };
  std::vector<Branch> branches;
};

// Probability floor below which a branch keeps the zero vector (it then
// contributes 0 to every average).
inline constexpr double kBranchFloor = 1e-14;

// Rank-1 projective measurement of the qubits in `a`; branch index bits are
// outcomes in mask member order (member 0 = most significant bit).  Branch
// states live on the kept qubits in ascending label order.
Ensemble measure_local(const StateVector& psi, const SubsystemMask& a,
                       const LocalBasisParams& params);
Ensemble measure_global(const StateVector& psi, const SubsystemMask& a,
                        const GlobalBasis& basis);

// sum_i p_i E(phi_i); kind's s is relative to the branch states.
double average_entanglement(const Ensemble& ens, const MeasureKind& kind);

// Exact MEA of the n-tangle: F(Psi_B, tilde(Psi_B)).  Requires an even
// number of kept qubits.
double mea_tau_exact(const StateVector& psi, const SubsystemMask& a);

// Measurement basis on A attaining mea_tau_exact.  Construction: spectral
// decomposition of Psi_B, Takagi of tau_ij = sqrt(l_i l_j) <v_i|tilde v_j>,
// then the purification rotation; see optimal_global_basis() in
// localize.cpp.
GlobalBasis optimal_global_basis(const StateVector& psi,
                                 const SubsystemMask& a);

// min over nonempty proper subsets gamma of B of sqrt(2(1 - Tr Psi_gamma^2)).
double gme_upper_bound(const StateVector& psi, const SubsystemMask& a);

// C(Psi; s) of the full input state; s must be a nonempty subset of the kept
// qubits.
double ce_upper_bound(const StateVector& psi, const SubsystemMask& a,
                      const SubsystemMask& s);

// 3x3 covariance Q_pq = <sigma_p sigma_q> - <sigma_p><sigma_q> for Pauli
// axes (x, y, z) on qubits i and j.
Eigen::Matrix3d correlation_matrix(const StateVector& psi, int i, int j);

// (1/2) max over ordered pairs i != j in s of sigma_max(Q^{ij}): a lower
// bound on the localizable sqrt-CE.
double ce_lower_bound(const StateVector& psi, const SubsystemMask& s);

struct LmeResult {
  double value = 0.0;
  LocalBasisParams params;
  int non_finite_discarded = 0;
};

// PSO search over local product bases on `a` maximizing the average measure
// over the post-measurement ensemble.  kind's s uses full-register labels
// (a subset of the kept qubits); it is rebased internally.
LmeResult lme_estimate(const StateVector& psi, const SubsystemMask& a,
                       const MeasureKind& kind, const PsoConfig& cfg);

// Right-hand side of the trace-norm continuity bound for localized measures:
// NTangle, CE -> (2 sqrt 2 + 1) t;  GME -> 2^{5/4} sqrt(t) + t;
// SqrtCE -> 2^{3/4} sqrt(t) + t.
double continuity_rhs(const MeasureKind& kind, double trace_dist);

}  // namespace entloc
