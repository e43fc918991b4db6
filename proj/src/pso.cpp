#include "entloc/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "entloc/rng.hpp"
#include "entloc/threading.hpp"

namespace entloc {

BoxBounds BoxBounds::cube(int dims, double l, double h) {
  BoxBounds b;
  b.lo.assign(std::size_t(dims), l);
  b.hi.assign(std::size_t(dims), h);
  b.periodic.assign(std::size_t(dims), 0);
  return b;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Particle {
  std::vector<double> x, v, best_x;
  double best_f = kNegInf;
  std::mt19937_64 rng;
};

// Shortest signed displacement toward a target on a periodic axis.
double wrap_diff(double diff, double w) {
  diff = std::fmod(diff + 0.5 * w, w);
  if (diff < 0) diff += w;
  return diff - 0.5 * w;
}

// Wrap periodic coordinates, reflect the rest; velocity flips on reflection.
void confine(double& x, double& v, double lo, double hi, bool periodic) {
  const double w = hi - lo;
  if (periodic) {
    x = lo + std::fmod(x - lo, w);
    if (x < lo) x += w;
    return;
  }
  // A clamped velocity moves at most w/2 per step, so one fold suffices; the
  // loop is a guard for pathological configs.
  for (int it = 0; it < 8 && (x < lo || x > hi); ++it) {
    if (x < lo) {
      x = lo + (lo - x);
      v = -v;
    } else if (x > hi) {
      x = hi - (x - hi);
      v = -v;
    }
  }
  x = std::clamp(x, lo, hi);
}

}  // namespace

PsoResult maximize(const std::function<double(const std::vector<double>&)>& f,
                   const BoxBounds& bounds, const PsoConfig& cfg) {
  const int dims = bounds.dims();
  if (dims <= 0) throw std::invalid_argument("pso: empty bounds");
  if (int(bounds.hi.size()) != dims || int(bounds.periodic.size()) != dims)
    throw std::invalid_argument("pso: inconsistent bounds arrays");
  for (int d = 0; d < dims; ++d)
    if (!(bounds.hi[d] > bounds.lo[d]))
      throw std::invalid_argument("pso: empty box side");
  if (cfg.swarm_size < 1 || cfg.iterations < 1 || cfg.restarts < 1)
    throw std::invalid_argument("pso: bad budget");

  PsoResult result;
  result.best_value = kNegInf;
  int discarded = 0;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::vector<Particle> swarm(std::size_t(cfg.swarm_size));
    for (int p = 0; p < cfg.swarm_size; ++p) {
      auto& pt = swarm[std::size_t(p)];
      pt.rng = make_engine(cfg.seed, std::uint64_t(restart),
                           std::uint64_t(p) + 1);
      pt.x.resize(std::size_t(dims));
      pt.v.resize(std::size_t(dims));
      std::uniform_real_distribution<double> u01(0.0, 1.0);
      for (int d = 0; d < dims; ++d) {
        const double w = bounds.hi[d] - bounds.lo[d];
        pt.x[std::size_t(d)] = bounds.lo[d] + w * u01(pt.rng);
        pt.v[std::size_t(d)] = w * (u01(pt.rng) - 0.5) * cfg.velocity_clamp;
      }
      pt.best_x = pt.x;
    }

    std::vector<double> fitness(std::size_t(cfg.swarm_size), kNegInf);
    std::vector<double> gbest_x;
    double gbest_f = kNegInf;
    std::vector<double> trajectory;
    trajectory.reserve(std::size_t(cfg.iterations));

    for (int iter = 0; iter < cfg.iterations; ++iter) {
      parallel_for(std::size_t(cfg.swarm_size), cfg.threads,
                   [&](std::size_t p) { fitness[p] = f(swarm[p].x); });

      // Fixed-order reduction keeps ties and results thread-count invariant.
      for (int p = 0; p < cfg.swarm_size; ++p) {
        auto& pt = swarm[std::size_t(p)];
        const double fp = fitness[std::size_t(p)];
        if (!std::isfinite(fp)) {
          ++discarded;
          continue;
        }
        if (fp > pt.best_f) {
          pt.best_f = fp;
          pt.best_x = pt.x;
        }
        if (fp > gbest_f) {
          gbest_f = fp;
          gbest_x = pt.x;
        }
      }
      trajectory.push_back(gbest_f);

      for (int p = 0; p < cfg.swarm_size; ++p) {
        auto& pt = swarm[std::size_t(p)];
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        for (int d = 0; d < dims; ++d) {
          const double r1 = u01(pt.rng), r2 = u01(pt.rng);
          const double w = bounds.hi[d] - bounds.lo[d];
          const bool per = bounds.periodic[std::size_t(d)] != 0;
          double to_pbest = pt.best_x[std::size_t(d)] - pt.x[std::size_t(d)];
          double to_gbest =
              gbest_x.empty() ? 0.0 : gbest_x[std::size_t(d)] - pt.x[std::size_t(d)];
          if (per) {
            to_pbest = wrap_diff(to_pbest, w);
            to_gbest = gbest_x.empty() ? 0.0 : wrap_diff(to_gbest, w);
          }
          double v = cfg.inertia * pt.v[std::size_t(d)] +
                     cfg.cognitive * r1 * to_pbest +
                     cfg.social * r2 * to_gbest;
          const double vmax = cfg.velocity_clamp * w;
          v = std::clamp(v, -vmax, vmax);
          pt.v[std::size_t(d)] = v;
          pt.x[std::size_t(d)] += v;
          confine(pt.x[std::size_t(d)], pt.v[std::size_t(d)], bounds.lo[d],
                  bounds.hi[d], bounds.periodic[std::size_t(d)] != 0);
        }
      }
    }

    if (gbest_f > result.best_value) {
      result.best_value = gbest_f;
      result.best_point = gbest_x;
      result.trajectory = std::move(trajectory);
    }
  }

  if (!std::isfinite(result.best_value))
    throw std::runtime_error("pso: objective never returned a finite value");
  result.non_finite_discarded = discarded;
  return result;
}

}  // namespace entloc
