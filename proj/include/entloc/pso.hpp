#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace entloc {

// Clerc-Kennedy constriction defaults.
struct PsoConfig {
  int swarm_size = 50;
  int iterations = 200;
  double inertia = 0.7298;
  double cognitive = 1.49618;
  double social = 1.49618;
  int restarts = 3;
  std::uint64_t seed = 0;
  // Velocity clamp as a fraction of each dimension's box width.
  double velocity_clamp = 0.5;
  int threads = 1;
};

// Per-dimension box.  Periodic dimensions wrap (positions reduced mod the
// width); non-periodic ones reflect at the walls.
struct BoxBounds {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<std::uint8_t> periodic;

  static BoxBounds cube(int dims, double l, double h);
  int dims() const { return static_cast<int>(lo.size()); }
};

struct PsoResult {
  double best_value = 0.0;
  std::vector<double> best_point;
  // Non-finite objective values seen (those particles' positions were
  // discarded for best-tracking that iteration).
  int non_finite_discarded = 0;
  // Best value after each iteration of the winning restart.
  std::vector<double> trajectory;
};

// Maximizes objective over bounds.  Deterministic: every particle owns an RNG
// stream derived from (seed, restart, particle), and best-reductions run in
// fixed particle order, so identical (seed, bounds, objective) give
// bit-identical results for any cfg.threads.  Ties prefer the lowest particle
// index, then the earlier restart.
PsoResult maximize(const std::function<double(const std::vector<double>&)>& f,
                   const BoxBounds& bounds, const PsoConfig& cfg);

}  // namespace entloc
