#pragma once

#include <Eigen/Dense>
#include <vector>

#include "entloc/pso.hpp"
#include "entloc/state.hpp"
#include "entloc/table.hpp"

namespace entloc {

// H = -J sum_i sx_i sx_{i+1} - h sum_i sz_i - h_x sum_i sx_i, periodic
// (site n wraps to 0; at n = 2 the wrap duplicates the single bond, so the
// xx term appears twice).  Real symmetric in the computational basis.
struct TfimParams {
  int n = 2;
  double j = 1.0;
  double h = 1.0;
  double h_x = 0.0;
  bool periodic = true;
};

Eigen::MatrixXd tfim_hamiltonian(const TfimParams& p);

struct GroundState {
  double energy = 0.0;
  StateVector state;
};

// Dense lowest eigenpair, n <= 12.  Near-degenerate ground spaces (gap below
// 1e-9 relative) are resolved by projecting the symmetric x-GHZ combination
// (|+>^n + |->^n)/sqrt(2) onto the ground space, which pins the h -> 0 limit
// deterministically.
GroundState ground_state(const TfimParams& p);

struct IsingSweepConfig {
  int n = 9;
  SubsystemMask measured;         // measured sites A
  std::vector<double> j_over_h;   // grid, h is fixed at 1
  double h_x = 0.0;
  SubsystemMask ce_s;             // s for the CE columns; empty = all of B
  PsoConfig pso;
  int threads = 1;
};

// Columns: j_over_h, h_x, energy, lme_tau, mea_tau, lme_ce, ce_ub, ce_lb.
Table ising_sweep(const IsingSweepConfig& cfg);

}  // namespace entloc
