#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "entloc/haar.hpp"
#include "entloc/localize.hpp"
#include "entloc/rng.hpp"
#include "oracles.hpp"

using namespace entloc;

TEST_CASE("haar state sampling is seeded and normalized") {
  auto r1 = make_engine(42, 0);
  auto r2 = make_engine(42, 0);
  const StateVector a = sample_haar(3, r1);
  const StateVector b = sample_haar(3, r2);
  CHECK((a.amplitudes() - b.amplitudes()).norm() == 0.0);
  CHECK(a.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));
  auto r3 = make_engine(43, 0);
  const StateVector c = sample_haar(3, r3);
  CHECK((a.amplitudes() - c.amplitudes()).norm() > 1e-3);
}

TEST_CASE("haar unitary sampling") {
  auto rng = make_engine(44, 0);
  const Eigen::MatrixXcd u = sample_haar_unitary(4, rng);
  CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  auto rng2 = make_engine(44, 0);
  const Eigen::MatrixXcd v = sample_haar_unitary(4, rng2);
  CHECK((u - v).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("closed-form Haar moments") {
  CHECK(expected_purity(4, 4) == doctest::Approx(8.0 / 17.0).epsilon(1e-14));
  CHECK(expected_purity(2, 2) == doctest::Approx(0.8).epsilon(1e-14));
  // Even kept-qubit count: (d_A + 1) / (d_A d_B + 1).
  CHECK(expected_tilde_overlap(4, 4) ==
        doctest::Approx(5.0 / 17.0).epsilon(1e-14));
  CHECK(expected_tilde_overlap(2, 4) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  // Odd kept-qubit count flips the sign of the swap term.
  CHECK(expected_tilde_overlap(4, 8) ==
        doctest::Approx(1.0 / 11.0).epsilon(1e-14));
  CHECK(expected_avg_ce(3, 3) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(expected_avg_ce(3, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(ntangle_mean_bound(4) ==
        doctest::Approx(std::sqrt(0.4)).epsilon(1e-14));
}

TEST_CASE("concentration bound constants") {
  const ConcentrationBounds cb = concentration_bounds(6, 2, 0.1);
  CHECK(cb.threshold ==
        doctest::Approx(1.0 - std::sqrt(8.0 / 64.0) - 0.1).epsilon(1e-12));
  const double denom = 9.0 * std::pow(std::numbers::pi, 3.0) *
                       std::pow(4.0 * std::sqrt(2.0) + 2.0, 2.0);
  const double tail = 2.0 * std::exp(-2.0 * 64.0 * 4.0 * 0.01 / denom);
  CHECK(cb.tail == doctest::Approx(tail).epsilon(1e-12));
}

TEST_CASE("Monte Carlo purity mean tracks the closed form") {
  auto rng = make_engine(45, 0);
  const int samples = 1500;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    const StateVector psi = sample_haar(4, rng);
    const double p = purity(psi, SubsystemMask(4, {2, 3}));
    sum += p;
    sq += p * p;
  }
  const double mean = sum / samples;
  const double se =
      std::sqrt((sq / samples - mean * mean) / double(samples - 1));
  CHECK(std::abs(mean - expected_purity(4, 4)) < 4.0 * se);
}

TEST_CASE("haar sweep table shape and invariants") {
  HaarSweepConfig cfg;
  cfg.n_a = 1;
  cfg.n_b = 2;
  cfg.samples = 4;
  cfg.kind = MeasureKind::ntangle();
  cfg.seed = 11;
  cfg.pso.swarm_size = 10;
  cfg.pso.iterations = 25;
  cfg.pso.restarts = 1;
  cfg.timings = false;
  const Table t = haar_sweep(cfg);
  CHECK(t.columns == std::vector<std::string>{"sample_index", "lme",
                                              "mea_or_ub", "ub", "lb",
                                              "seconds"});
  REQUIRE(t.rows.size() == 4);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    CHECK(row[0] == double(i));
    // For the n-tangle the mea column and the ub column both hold the exact
    // MEA, the lb is trivial and timings are suppressed.
    CHECK(row[1] <= row[2] + 1e-8);
    CHECK(row[2] == row[3]);
    CHECK(row[4] == 0.0);
    CHECK(row[5] == 0.0);
    CHECK(row[1] >= 0.0);
  }
}

TEST_CASE("haar sweep is deterministic and thread-count invariant") {
  HaarSweepConfig cfg;
  cfg.n_a = 1;
  cfg.n_b = 2;
  cfg.samples = 3;
  cfg.kind = MeasureKind::gme();
  cfg.seed = 12;
  cfg.pso.swarm_size = 8;
  cfg.pso.iterations = 15;
  cfg.pso.restarts = 1;
  cfg.timings = false;
  const Table a = haar_sweep(cfg);
  const Table b = haar_sweep(cfg);
  cfg.threads = 2;
  const Table c = haar_sweep(cfg);
  CHECK(a.rows == b.rows);
  CHECK(a.rows == c.rows);
}

TEST_CASE("haar sweep CE bounds sandwich the estimate") {
  HaarSweepConfig cfg;
  cfg.n_a = 1;
  cfg.n_b = 3;
  cfg.samples = 5;
  cfg.kind = MeasureKind::ce({1, 2});
  cfg.seed = 13;
  cfg.pso.swarm_size = 16;
  cfg.pso.iterations = 50;
  cfg.pso.restarts = 1;
  cfg.timings = false;
  const Table t = haar_sweep(cfg);
  for (const auto& row : t.rows) {
    CHECK(row[4] <= row[1] + 1e-9);  // lb <= lme
    CHECK(row[1] <= row[3] + 1e-8);  // lme <= ub
    CHECK(row[2] == row[3]);
  }
}
