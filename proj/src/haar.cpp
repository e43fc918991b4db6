#include "entloc/haar.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "entloc/linalg.hpp"
#include "entloc/rng.hpp"
#include "entloc/threading.hpp"

namespace entloc {

StateVector sample_haar(int n_qubits, std::mt19937_64& rng) {
  check_qubit_count(n_qubits, "sample_haar");
  const std::int64_t d = std::int64_t(1) << n_qubits;
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXcd a(d);
  for (std::int64_t i = 0; i < d; ++i) {
    const double re = g(rng);
    const double im = g(rng);
    a[i] = cplx(re, im);
  }
  a /= a.norm();
  StateVector s = StateVector::zero_state(n_qubits);
  s.amplitudes() = std::move(a);
  return s;
}

Eigen::MatrixXcd sample_haar_unitary(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("sample_haar_unitary: dim < 1");
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      z(i, j) = cplx(re, im);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the R-diagonal phases so the distribution is Haar rather than QR's
  // convention-dependent one.
  for (int i = 0; i < dim; ++i) {
    const cplx rii = r(i, i);
    const double m = std::abs(rii);
    q.col(i) *= (m > 0) ? rii / m : cplx(1.0, 0.0);
  }
  return q;
}

double expected_purity(double d_a, double d_b) {
  if (d_a < 1 || d_b < 2) throw std::invalid_argument("expected_purity: dims");
  return (d_a + d_b) / (d_a * d_b + 1.0);
}

double expected_tilde_overlap(double d_a, double d_b) {
  if (d_a < 1 || d_b < 2)
    throw std::invalid_argument("expected_tilde_overlap: dims");
  const double lg = std::log2(d_b);
  const int n_b = int(std::lround(lg));
  if (std::abs(lg - n_b) > 1e-9)
    throw std::invalid_argument(
        "expected_tilde_overlap: d_b must be a power of 2");
  const double sign = (n_b % 2 == 0) ? 1.0 : -1.0;
  return (d_a + sign) / (d_a * d_b + 1.0);
}

double expected_avg_ce(int n_b, int s_size) {
  if (s_size < 1 || s_size > n_b)
    throw std::invalid_argument("expected_avg_ce: bad |s|");
  const double p3 = std::pow(3.0, s_size);
  const double num = std::ldexp(1.0, n_b - s_size) + 1.0;
  const double den = std::ldexp(1.0, s_size) * (std::ldexp(1.0, n_b) + 1.0);
  return 1.0 - p3 * num / den;
}

double ntangle_mean_bound(double d_b) {
  if (d_b < 2) throw std::invalid_argument("ntangle_mean_bound: dims");
  return std::sqrt(2.0 / (d_b + 1.0));
}

ConcentrationBounds concentration_bounds(int n_a, int n_b, double eps) {
  if (n_a < 1 || n_b < 1 || eps <= 0)
    throw std::invalid_argument("concentration_bounds: bad arguments");
  const double d_a = std::ldexp(1.0, n_a);
  const double d_b = std::ldexp(1.0, n_b);
  ConcentrationBounds out;
  out.threshold = 1.0 - std::sqrt(2.0 * d_b / d_a) - eps;
  const double lipschitz = 4.0 * std::numbers::sqrt2 + 2.0;
  const double pi3 = std::pow(std::numbers::pi, 3.0);
  out.tail = 2.0 * std::exp(-2.0 * d_a * d_b * eps * eps /
                            (9.0 * pi3 * lipschitz * lipschitz));
  return out;
}

Table haar_sweep(const HaarSweepConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("haar_sweep: samples < 1");
  check_qubit_count(cfg.n_a + cfg.n_b, "haar_sweep");
  if (cfg.n_a < 1 || cfg.n_b < 1)
    throw std::invalid_argument("haar_sweep: empty subsystem");
  const int n = cfg.n_a + cfg.n_b;
  std::vector<int> a_members(std::size_t(cfg.n_a));
  for (int q = 0; q < cfg.n_a; ++q) a_members[std::size_t(q)] = q;
  const SubsystemMask a(n, a_members);
  const SubsystemMask b = a.complement();

  if (cfg.kind.variant == Measure::NTangle && cfg.n_b % 2 != 0)
    throw std::invalid_argument("haar_sweep: n-tangle needs even n_b");
  if (cfg.kind.needs_s() && cfg.kind.s.empty())
    throw std::invalid_argument("haar_sweep: ce kinds need s");

  Table t;
  t.columns = {"sample_index", "lme", "mea_or_ub", "ub", "lb", "seconds"};
  t.rows.assign(std::size_t(cfg.samples), {});

  parallel_for(std::size_t(cfg.samples), cfg.threads, [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng = make_engine(cfg.seed, 0x9aa2, i);
    StateVector psi = sample_haar(n, rng);

    PsoConfig pso = cfg.pso;
    pso.seed = derive_seed(cfg.seed, 0x9aa3, i);
    const double lme = lme_estimate(psi, a, cfg.kind, pso).value;

    double mea_or_ub = 0.0, ub = 0.0, lb = 0.0;
    switch (cfg.kind.variant) {
      case Measure::NTangle:
        mea_or_ub = mea_tau_exact(psi, a);
        ub = mea_or_ub;
        break;
      case Measure::GmeConcurrence:
        ub = gme_upper_bound(psi, a);
        mea_or_ub = ub;
        break;
      case Measure::ConcentratableEntanglement:
      case Measure::SqrtConcentratableEntanglement: {
        const SubsystemMask s(n, cfg.kind.s);
        ub = ce_upper_bound(psi, a, s);
        const double corr =
            s.size() >= 2 ? ce_lower_bound(psi, s) : 0.0;
        if (cfg.kind.variant == Measure::SqrtConcentratableEntanglement) {
          ub = std::sqrt(ub);
          lb = corr;
        } else {
          lb = corr * corr;
        }
        mea_or_ub = ub;
        break;
      }
    }
    const double seconds =
        cfg.timings
            ? std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count()
            : 0.0;
    t.rows[i] = {double(i), lme, mea_or_ub, ub, lb, seconds};
  });
  return t;
}

}  // namespace entloc
