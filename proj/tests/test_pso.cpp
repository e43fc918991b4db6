#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "entloc/pso.hpp"

using namespace entloc;

namespace {
constexpr double kPi = std::numbers::pi;

double neg_sphere(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return -s;
}

double neg_rastrigin(const std::vector<double>& x) {
  double s = 10.0 * double(x.size());
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v);
  return -s;
}
}  // namespace

TEST_CASE("sphere maximum is found") {
  PsoConfig cfg;
  cfg.swarm_size = 20;
  cfg.iterations = 120;
  cfg.restarts = 1;
  cfg.seed = 1;
  const PsoResult r = maximize(neg_sphere, BoxBounds::cube(2, -4.0, 4.0), cfg);
  CHECK(r.best_value > -1e-6);
  CHECK(std::abs(r.best_point[0]) < 1e-3);
  CHECK(std::abs(r.best_point[1]) < 1e-3);
  CHECK(!r.trajectory.empty());
  // The per-iteration record never decreases.
  for (std::size_t i = 1; i < r.trajectory.size(); ++i)
    CHECK(r.trajectory[i] >= r.trajectory[i - 1]);
}

TEST_CASE("rastrigin under the default budget") {
  PsoConfig cfg;
  cfg.seed = 2;
  const PsoResult r =
      maximize(neg_rastrigin, BoxBounds::cube(2, -5.12, 5.12), cfg);
  CHECK(r.best_value > -1e-3);
}

TEST_CASE("bit-identical results for any thread count") {
  PsoConfig cfg;
  cfg.swarm_size = 24;
  cfg.iterations = 60;
  cfg.restarts = 2;
  cfg.seed = 77;
  cfg.threads = 1;
  const BoxBounds box = BoxBounds::cube(3, -5.12, 5.12);
  const PsoResult one = maximize(neg_rastrigin, box, cfg);
  cfg.threads = 8;
  const PsoResult eight = maximize(neg_rastrigin, box, cfg);
  CHECK(one.best_value == eight.best_value);
  REQUIRE(one.best_point.size() == eight.best_point.size());
  for (std::size_t i = 0; i < one.best_point.size(); ++i)
    CHECK(one.best_point[i] == eight.best_point[i]);
  CHECK(one.trajectory == eight.trajectory);
}

TEST_CASE("periodic dimensions wrap around the seam") {
  // Optimum of cos(x - 0.1) sits at 0.1; with period 2 pi the wrap-aware
  // displacement must pull particles across the 0/2pi seam.
  BoxBounds box;
  box.lo = {0.0};
  box.hi = {2.0 * kPi};
  box.periodic = {1};
  PsoConfig cfg;
  cfg.swarm_size = 16;
  cfg.iterations = 80;
  cfg.restarts = 2;
  cfg.seed = 5;
  const PsoResult r = maximize(
      [](const std::vector<double>& x) { return std::cos(x[0] - 0.1); }, box,
      cfg);
  CHECK(r.best_value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.best_point[0] >= 0.0);
  CHECK(r.best_point[0] < 2.0 * kPi);
}

TEST_CASE("reflective walls keep iterates inside the box") {
  // Maximum at the wall itself.
  BoxBounds box;
  box.lo = {0.0};
  box.hi = {kPi};
  box.periodic = {0};
  PsoConfig cfg;
  cfg.swarm_size = 16;
  cfg.iterations = 80;
  cfg.restarts = 1;
  cfg.seed = 6;
  const PsoResult r = maximize(
      [](const std::vector<double>& x) { return x[0]; }, box, cfg);
  CHECK(r.best_value == doctest::Approx(kPi).epsilon(1e-6));
  CHECK(r.best_point[0] <= kPi);
}

TEST_CASE("non-finite objectives are discarded but counted") {
  PsoConfig cfg;
  cfg.swarm_size = 12;
  cfg.iterations = 30;
  cfg.restarts = 1;
  cfg.seed = 9;
  const PsoResult r = maximize(
      [](const std::vector<double>& x) {
        if (x[0] > 0.0) return std::numeric_limits<double>::quiet_NaN();
        return -x[0] * x[0];
      },
      BoxBounds::cube(1, -2.0, 2.0), cfg);
  CHECK(r.non_finite_discarded > 0);
  CHECK(std::isfinite(r.best_value));
  CHECK(r.best_point[0] <= 0.0);
}

TEST_CASE("config validation") {
  PsoConfig cfg;
  cfg.swarm_size = 0;
  CHECK_THROWS_AS(maximize(neg_sphere, BoxBounds::cube(1, -1.0, 1.0), cfg),
                  std::invalid_argument);
  PsoConfig cfg2;
  BoxBounds bad;
  bad.lo = {0.0, 0.0};
  bad.hi = {1.0};
  bad.periodic = {0, 0};
  CHECK_THROWS_AS(maximize(neg_sphere, bad, cfg2), std::invalid_argument);
}
