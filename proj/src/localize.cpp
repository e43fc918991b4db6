#include "entloc/localize.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <string>
#include <stdexcept>

#include "entloc/linalg.hpp"

namespace entloc {

namespace {

// d_A x d_B coefficient matrix of psi: row a, column b, indices in mask
// member order (ascending labels, big-endian inside each block).
Eigen::MatrixXcd coefficient_matrix(const StateVector& psi,
                                    const SubsystemMask& a,
                                    const SubsystemMask& b) {
  const auto aoff = scatter_offsets(a);
  const auto boff = scatter_offsets(b);
  Eigen::MatrixXcd m(std::int64_t(aoff.size()), std::int64_t(boff.size()));
  for (std::size_t i = 0; i < aoff.size(); ++i)
    for (std::size_t j = 0; j < boff.size(); ++j)
      m(std::int64_t(i), std::int64_t(j)) =
          psi.amplitudes()[std::int64_t(aoff[i] | boff[j])];
  return m;
}

void check_measurement_args(const StateVector& psi, const SubsystemMask& a,
                            const char* where) {
  if (a.total_qubits != psi.n_qubits())
    throw std::invalid_argument(std::string(where) + ": mask/state mismatch");
  if (a.empty() || a.size() == a.total_qubits)
    throw std::invalid_argument(std::string(where) +
                                ": measured set must be nonempty and proper");
  if (psi.is_zero())
    throw std::invalid_argument(std::string(where) + ": zero vector input");
}

Ensemble ensemble_from_branches(Eigen::MatrixXcd branches, int n_b) {
  // One branch per row; rows are unnormalized post-measurement states.
  Ensemble ens;
  ens.branches.resize(std::size_t(branches.rows()));
  for (std::int64_t i = 0; i < branches.rows(); ++i) {
    auto& br = ens.branches[std::size_t(i)];
    const double p = branches.row(i).squaredNorm();
    if (p < kBranchFloor) {
      br.probability = 0.0;
      br.state = StateVector::zero_state(n_b);
    } else {
      br.probability = p;
      br.state = StateVector::zero_state(n_b);
      br.state.amplitudes() = branches.row(i).transpose() / std::sqrt(p);
    }
  }
  return ens;
}

}  // namespace

Ensemble measure_local(const StateVector& psi, const SubsystemMask& a,
                       const LocalBasisParams& params) {
  check_measurement_args(psi, a, "measure_local");
  const int k = a.size();
  if (int(params.angles.size()) != k)
    throw std::invalid_argument("measure_local: need one angle pair per qubit");
  const SubsystemMask b = a.complement();
  Eigen::MatrixXcd m = coefficient_matrix(psi, a, b);

  // Per-qubit basis vectors: row 0 outcome "0", row 1 outcome "1".
  std::vector<Eigen::Matrix2cd> basis(static_cast<std::size_t>(k));
  for (int q = 0; q < k; ++q) {
    const double th = params.angles[std::size_t(q)][0];
    const double ph = params.angles[std::size_t(q)][1];
    const double c = std::cos(0.5 * th), s = std::sin(0.5 * th);
    const cplx e = std::polar(1.0, ph);
    basis[std::size_t(q)] << c, s * e, s, -c * e;
  }

  const std::int64_t da = std::int64_t(1) << k;
  Eigen::MatrixXcd branches = Eigen::MatrixXcd::Zero(da, m.cols());
  for (std::int64_t o = 0; o < da; ++o) {
    for (std::int64_t idx = 0; idx < da; ++idx) {
      cplx c = 1.0;
      for (int q = 0; q < k; ++q) {
        const int ob = int((o >> (k - 1 - q)) & 1);
        const int ib = int((idx >> (k - 1 - q)) & 1);
        c *= std::conj(basis[std::size_t(q)](ob, ib));
      }
      branches.row(o) += c * m.row(idx);
    }
  }
  return ensemble_from_branches(std::move(branches), b.size());
}

Ensemble measure_global(const StateVector& psi, const SubsystemMask& a,
                        const GlobalBasis& basis) {
  check_measurement_args(psi, a, "measure_global");
  const std::int64_t da = std::int64_t(1) << a.size();
  if (basis.columns.rows() != da || basis.columns.cols() != da)
    throw std::invalid_argument("measure_global: basis dimension mismatch");
  if ((basis.columns.adjoint() * basis.columns -
       Eigen::MatrixXcd::Identity(da, da))
          .cwiseAbs()
          .maxCoeff() > 1e-8)
    throw std::invalid_argument("measure_global: basis is not unitary");
  const SubsystemMask b = a.complement();
  Eigen::MatrixXcd m = coefficient_matrix(psi, a, b);
  Eigen::MatrixXcd branches = basis.columns.adjoint() * m;
  return ensemble_from_branches(std::move(branches), b.size());
}

double average_entanglement(const Ensemble& ens, const MeasureKind& kind) {
  double acc = 0.0;
  for (const auto& br : ens.branches) {
    if (br.probability <= 0.0) continue;
    acc += br.probability * evaluate(kind, br.state);
  }
  return acc;
}

namespace {

// Schmidt data of psi across the A|B cut plus the symmetric overlap matrix
// tau_ij = s_i s_j <w_i|tilde w_j> on the retained Schmidt vectors w_k of
// Psi_B.  Its Takagi values sigma_i are the branch tangles of the optimal
// measurement and sum to F(Psi_B, tilde Psi_B).
struct TauData {
  Eigen::MatrixXcd tau;     // rank x rank complex symmetric
  Eigen::MatrixXcd v_conj;  // conjugated right singular vectors, da x da
  int rank = 0;
};

TauData tau_overlap_data(const StateVector& psi, const SubsystemMask& a,
                         const SubsystemMask& b, const char* who) {
  Eigen::MatrixXcd mt = coefficient_matrix(psi, a, b).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      mt, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  while (rank < sv.size() && sv[rank] > 1e-12) ++rank;
  if (rank == 0)
    throw std::runtime_error(std::string(who) + ": zero coefficient matrix");

  // tilde of each retained eigenvector of Psi_B, reusing the state routine.
  Eigen::MatrixXcd w = svd.matrixU().leftCols(rank);
  Eigen::MatrixXcd wt(w.rows(), rank);
  for (int i = 0; i < rank; ++i) {
    StateVector v = StateVector::zero_state(b.size());
    v.amplitudes() = w.col(i);
    wt.col(i) = wootters_tilde(v).amplitudes();
  }

  TauData out;
  out.tau.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      out.tau(i, j) = sv[i] * sv[j] * (w.col(i).adjoint() * wt.col(j))(0, 0);
  out.v_conj = svd.matrixV().conjugate();
  out.rank = rank;
  return out;
}

}  // namespace

// F(Psi_B, tilde Psi_B) equals the nuclear norm of the tau overlap matrix:
// the nonzero spectrum of Psi_B tilde(Psi_B) matches that of tau tau^dagger,
// so summing singular values of the small matrix sidesteps the square roots
// of near-zero eigenvalues that a rank-deficient density-matrix fidelity
// would otherwise take.
double mea_tau_exact(const StateVector& psi, const SubsystemMask& a) {
  check_measurement_args(psi, a, "mea_tau_exact");
  const SubsystemMask b = a.complement();
  if (b.size() % 2 != 0)
    throw std::invalid_argument("mea_tau_exact: kept qubit count must be even");
  const TauData td = tau_overlap_data(psi, a, b, "mea_tau_exact");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(td.tau);
  return std::min(svd.singularValues().sum(), 1.0);
}

// Constructive optimum.  With the SVD M^T = sum_k s_k |w_k><u_k| of the
// transposed coefficient matrix, Psi_B = sum_k s_k^2 |w_k><w_k|, so the w_k
// are its eigenvectors with lambda_k = s_k^2.  Takagi-diagonalizing
// tau_ij = sqrt(l_i l_j) <w_i|tilde w_j> = (V Sigma V^T)_ij and setting
// U = V^dagger makes the subnormalized vectors x_i = sum_j sqrt(l_j) U*_ij w_j
// satisfy <x_i|tilde x_j> = sigma_i delta_ij and sum_i |x_i><x_i| = Psi_B.
// The basis vector m_i = sum_j U_ij conj(u_j) then produces branch x_i
// exactly, and the average branch tau is sum_i sigma_i = F(Psi_B, tilde).
GlobalBasis optimal_global_basis(const StateVector& psi,
                                 const SubsystemMask& a) {
  check_measurement_args(psi, a, "optimal_global_basis");
  const SubsystemMask b = a.complement();
  if (b.size() % 2 != 0)
    throw std::invalid_argument(
        "optimal_global_basis: kept qubit count must be even");
  const TauData td = tau_overlap_data(psi, a, b, "optimal_global_basis");
  const int rank = td.rank;
  const std::int64_t da = td.v_conj.rows();

  TakagiResult tk = takagi(td.tau);
  Eigen::MatrixXcd u_rows = tk.u.adjoint();  // U = V^dagger, rank x rank

  GlobalBasis out;
  out.columns = Eigen::MatrixXcd::Zero(da, da);
  // Columns i < rank: m_i = sum_j U_ij conj(u_j); the remaining columns keep
  // the conjugated null-space singular vectors, an orthonormal completion.
  out.columns.leftCols(rank) = td.v_conj.leftCols(rank) * u_rows.transpose();
  out.columns.rightCols(da - rank) = td.v_conj.rightCols(da - rank);
  return out;
}

double gme_upper_bound(const StateVector& psi, const SubsystemMask& a) {
  check_measurement_args(psi, a, "gme_upper_bound");
  const SubsystemMask b = a.complement();
  if (b.size() < 2)
    throw std::invalid_argument("gme_upper_bound: need at least 2 kept qubits");
  double best = 2.0;
  const int k = b.size();
  for (std::uint64_t g = 1; g < (std::uint64_t(1) << k) - 1; ++g) {
    std::vector<int> members;
    for (int i = 0; i < k; ++i)
      if ((g >> i) & 1u) members.push_back(b.members[std::size_t(i)]);
    const double p = purity(psi, SubsystemMask(psi.n_qubits(), members));
    best = std::min(best, std::sqrt(std::max(0.0, 2.0 * (1.0 - p))));
  }
  return best;
}

double ce_upper_bound(const StateVector& psi, const SubsystemMask& a,
                      const SubsystemMask& s) {
  check_measurement_args(psi, a, "ce_upper_bound");
  if (s.total_qubits != psi.n_qubits())
    throw std::invalid_argument("ce_upper_bound: s mask mismatch");
  for (int q : s.members)
    if (a.contains(q))
      throw std::invalid_argument("ce_upper_bound: s must avoid measured qubits");
  return concentratable_entanglement(psi, s);
}

namespace {

// <P_i P_j> and <P_i> for Pauli axes 0=x, 1=y, 2=z by direct application.
void apply_pauli(Eigen::VectorXcd& v, int n, int qubit, int axis) {
  const std::int64_t bit = std::int64_t(1) << (n - 1 - qubit);
  const std::int64_t d = v.size();
  if (axis == 2) {
    for (std::int64_t i = 0; i < d; ++i)
      if (i & bit) v[i] = -v[i];
    return;
  }
  for (std::int64_t i = 0; i < d; ++i) {
    if (i & bit) continue;
    const cplx a0 = v[i], a1 = v[i | bit];
    if (axis == 0) {
      v[i] = a1;
      v[i | bit] = a0;
    } else {
      v[i] = cplx(0, -1) * a1;
      v[i | bit] = cplx(0, 1) * a0;
    }
  }
}

double pauli_expectation(const StateVector& psi,
                         std::initializer_list<std::pair<int, int>> ops) {
  Eigen::VectorXcd v = psi.amplitudes();
  for (auto [q, axis] : ops) apply_pauli(v, psi.n_qubits(), q, axis);
  return (psi.amplitudes().adjoint() * v)(0, 0).real();
}

}  // namespace

Eigen::Matrix3d correlation_matrix(const StateVector& psi, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= psi.n_qubits() || j >= psi.n_qubits())
    throw std::invalid_argument("correlation_matrix: bad qubit pair");
  Eigen::Vector3d mi, mj;
  for (int p = 0; p < 3; ++p) {
    mi[p] = pauli_expectation(psi, {{i, p}});
    mj[p] = pauli_expectation(psi, {{j, p}});
  }
  Eigen::Matrix3d q;
  for (int p = 0; p < 3; ++p)
    for (int r = 0; r < 3; ++r)
      q(p, r) = pauli_expectation(psi, {{i, p}, {j, r}}) - mi[p] * mj[r];
  return q;
}

double ce_lower_bound(const StateVector& psi, const SubsystemMask& s) {
  if (s.total_qubits != psi.n_qubits())
    throw std::invalid_argument("ce_lower_bound: mask mismatch");
  if (s.size() < 2)
    throw std::invalid_argument("ce_lower_bound: need |s| >= 2");
  double best = 0.0;
  for (std::size_t x = 0; x < s.members.size(); ++x)
    for (std::size_t y = x + 1; y < s.members.size(); ++y) {
      Eigen::Matrix3d q = correlation_matrix(psi, s.members[x], s.members[y]);
      best = std::max(best, max_singular_value(q.cast<cplx>()));
    }
  return std::min(0.5 * best, 1.0);
}

LmeResult lme_estimate(const StateVector& psi, const SubsystemMask& a,
                       const MeasureKind& kind, const PsoConfig& cfg) {
  check_measurement_args(psi, a, "lme_estimate");
  const SubsystemMask b = a.complement();
  const MeasureKind local_kind = rebase_to_subsystem(kind, b);
  const int k = a.size();

  BoxBounds bounds;
  bounds.lo.resize(std::size_t(2 * k));
  bounds.hi.resize(std::size_t(2 * k));
  bounds.periodic.resize(std::size_t(2 * k));
  for (int q = 0; q < k; ++q) {
    bounds.lo[std::size_t(2 * q)] = 0.0;       // theta, reflective
    bounds.hi[std::size_t(2 * q)] = std::numbers::pi;
    bounds.periodic[std::size_t(2 * q)] = 0;
    bounds.lo[std::size_t(2 * q + 1)] = 0.0;   // phi, periodic
    bounds.hi[std::size_t(2 * q + 1)] = 2.0 * std::numbers::pi;
    bounds.periodic[std::size_t(2 * q + 1)] = 1;
  }

  auto objective = [&](const std::vector<double>& x) {
    LocalBasisParams p;
    p.angles.resize(std::size_t(k));
    for (int q = 0; q < k; ++q)
      p.angles[std::size_t(q)] = {x[std::size_t(2 * q)],
                                  x[std::size_t(2 * q + 1)]};
    return average_entanglement(measure_local(psi, a, p), local_kind);
  };

  PsoResult r = maximize(objective, bounds, cfg);
  LmeResult out;
  out.value = r.best_value;
  out.non_finite_discarded = r.non_finite_discarded;
  out.params.angles.resize(std::size_t(k));
  for (int q = 0; q < k; ++q)
    out.params.angles[std::size_t(q)] = {r.best_point[std::size_t(2 * q)],
                                         r.best_point[std::size_t(2 * q + 1)]};
  return out;
}

double continuity_rhs(const MeasureKind& kind, double trace_dist) {
  if (trace_dist < 0)
    throw std::invalid_argument("continuity_rhs: negative distance");
  const double t = trace_dist;
  switch (kind.variant) {
    case Measure::NTangle:
    case Measure::ConcentratableEntanglement:
      return (2.0 * std::numbers::sqrt2 + 1.0) * t;
    case Measure::GmeConcurrence:
      return std::pow(2.0, 1.25) * std::sqrt(t) + t;
    case Measure::SqrtConcentratableEntanglement:
      return std::pow(2.0, 0.75) * std::sqrt(t) + t;
  }
  throw std::invalid_argument("continuity_rhs: unknown measure");
}

}  // namespace entloc
