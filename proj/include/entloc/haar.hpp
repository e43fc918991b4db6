#pragma once

#include <cstdint>
#include <random>

#include "entloc/localize.hpp"
#include "entloc/measures.hpp"
#include "entloc/pso.hpp"
#include "entloc/state.hpp"
#include "entloc/table.hpp"

namespace entloc {

// Haar-random pure state: 2^n complex standard Gaussians, normalized.
StateVector sample_haar(int n_qubits, std::mt19937_64& rng);

// Haar-random unitary: QR of a complex Ginibre matrix with the R-diagonal
// phase fix.
Eigen::MatrixXcd sample_haar_unitary(int dim, std::mt19937_64& rng);

// E[Tr Psi_B^2] = (d_A + d_B) / (d_A d_B + 1).
double expected_purity(double d_a, double d_b);

// E[Tr(Psi_B tilde(Psi_B))] for Haar states on d_A x d_B.  For an even
// number of B qubits this is (d_A + 1) / (d_A d_B + 1); for odd it is
// (d_A - 1) / (d_A d_B + 1) (the swap term flips sign with the transpose
// parity of sigma_y^{tensor N_B}).
double expected_tilde_overlap(double d_a, double d_b);

// Mean computational-basis-averaged CE:
// 1 - 3^{|s|} (2^{N_B - |s|} + 1) / (2^{|s|} (2^{N_B} + 1)).
double expected_avg_ce(int n_b, int s_size);

// E[tau] <= sqrt(2 / (d_B + 1)).
double ntangle_mean_bound(double d_b);

// One-sided concentration for the n-tangle MEA of Haar states:
// Pr(L <= threshold) <= tail with threshold = 1 - sqrt(2 d_B / d_A) - eps
// and tail = 2 exp(-2 d_A d_B eps^2 / (9 pi^3 (4 sqrt 2 + 2)^2)).
struct ConcentrationBounds {
  double threshold = 0.0;
  double tail = 0.0;
};
ConcentrationBounds concentration_bounds(int n_a, int n_b, double eps);

struct HaarSweepConfig {
  int n_a = 1;
  int n_b = 2;
  int samples = 100;
  MeasureKind kind = MeasureKind::ntangle();  // s in full-register labels
  std::uint64_t seed = 0;
  PsoConfig pso;
  int threads = 1;
  bool timings = true;  // fill the seconds column with wall time
};

// Columns: sample_index, lme, mea_or_ub, ub, lb, seconds.  A is the first
// n_a qubits.  mea_or_ub is the exact MEA for the n-tangle and the closed
// upper bound otherwise; lb is the squared correlation bound for CE, the
// plain correlation bound for sqrt-CE and 0 otherwise.
Table haar_sweep(const HaarSweepConfig& cfg);

}  // namespace entloc
