#include "entloc/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace entloc {

int capacity() {
  static const int cap = [] {
    int c = 20;
    if (const char* env = std::getenv("ENTLOC_CAPACITY")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0') c = static_cast<int>(v);
    }
    return std::clamp(c, 2, 24);
  }();
  return cap;
}

void check_qubit_count(int n, const char* where) {
  if (n < 1 || n > capacity()) {
    throw std::invalid_argument(std::string(where) + ": qubit count " +
                                std::to_string(n) + " outside [1, " +
                                std::to_string(capacity()) + "]");
  }
}

SubsystemMask::SubsystemMask(int total, std::vector<int> m)
    : total_qubits(total), members(std::move(m)) {
  check_qubit_count(total, "SubsystemMask");
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= total_qubits)
      throw std::invalid_argument("SubsystemMask: member out of range");
    if (i > 0 && members[i] == members[i - 1])
      throw std::invalid_argument("SubsystemMask: duplicate member");
  }
}

bool SubsystemMask::contains(int q) const {
  return std::binary_search(members.begin(), members.end(), q);
}

SubsystemMask SubsystemMask::complement() const {
  std::vector<int> rest;
  rest.reserve(total_qubits - size());
  for (int q = 0; q < total_qubits; ++q)
    if (!contains(q)) rest.push_back(q);
  return SubsystemMask(total_qubits, std::move(rest));
}

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  check_qubit_count(n_qubits_, "StateVector");
  if (amps_.size() != dim())
    throw std::invalid_argument("StateVector: dimension is not 2^n");
  const double norm2 = amps_.squaredNorm();
  if (norm2 < 1e-20) return;  // designated zero vector
  if (std::abs(norm2 - 1.0) > 2e-9)
    throw std::invalid_argument("StateVector: not normalized");
  amps_ /= std::sqrt(norm2);
}

StateVector StateVector::zero_state(int n) {
  check_qubit_count(n, "zero_state");
  StateVector s;
  s.n_qubits_ = n;
  s.amps_ = Eigen::VectorXcd::Zero(std::int64_t(1) << n);
  return s;
}

StateVector StateVector::basis_state(int n, std::uint64_t pattern) {
  check_qubit_count(n, "basis_state");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(std::int64_t(1) << n);
  if (pattern >= (std::uint64_t(1) << n))
    throw std::invalid_argument("basis_state: pattern out of range");
  a[static_cast<std::int64_t>(pattern)] = 1.0;
  return StateVector(n, std::move(a));
}

StateVector StateVector::ghz(int n) {
  check_qubit_count(n, "ghz");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(std::int64_t(1) << n);
  const double r = 1.0 / std::sqrt(2.0);
  a[0] = r;
  a[a.size() - 1] = r;
  return StateVector(n, std::move(a));
}

StateVector StateVector::w(int n) {
  check_qubit_count(n, "w");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(std::int64_t(1) << n);
  const double r = 1.0 / std::sqrt(double(n));
  for (int q = 0; q < n; ++q) a[std::int64_t(1) << (n - 1 - q)] = r;
  return StateVector(n, std::move(a));
}

StateVector StateVector::plus(int n) {
  check_qubit_count(n, "plus");
  const std::int64_t d = std::int64_t(1) << n;
  Eigen::VectorXcd a =
      Eigen::VectorXcd::Constant(d, 1.0 / std::sqrt(double(d)));
  return StateVector(n, std::move(a));
}

DensityOperator::DensityOperator(int n, Eigen::MatrixXcd m)
    : n_qubits(n), matrix(std::move(m)) {
  check_qubit_count(n, "DensityOperator");
  const std::int64_t d = std::int64_t(1) << n;
  if (matrix.rows() != d || matrix.cols() != d)
    throw std::invalid_argument("DensityOperator: dimension is not 2^n");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("DensityOperator: not Hermitian");
  if (std::abs(matrix.trace().real() - 1.0) > 1e-9 ||
      std::abs(matrix.trace().imag()) > 1e-9)
    throw std::invalid_argument("DensityOperator: trace is not 1");
}

DensityOperator density(const StateVector& psi) {
  DensityOperator rho;
  rho.n_qubits = psi.n_qubits();
  rho.matrix = psi.amplitudes() * psi.amplitudes().adjoint();
  return rho;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const int n = a.n_qubits() + b.n_qubits();
  check_qubit_count(n, "tensor_product");
  Eigen::VectorXcd out(std::int64_t(1) << n);
  const std::int64_t db = b.dim();
  for (std::int64_t i = 0; i < a.dim(); ++i)
    out.segment(i * db, db) = a.amplitudes()[i] * b.amplitudes();
  return StateVector(n, std::move(out));
}

std::vector<std::uint64_t> scatter_offsets(const SubsystemMask& mask) {
  const int k = mask.size();
  const int n = mask.total_qubits;
  std::vector<std::uint64_t> off(std::size_t(1) << k, 0);
  for (std::uint64_t x = 0; x < off.size(); ++x) {
    std::uint64_t g = 0;
    for (int i = 0; i < k; ++i) {
      if ((x >> (k - 1 - i)) & 1u) g |= std::uint64_t(1) << (n - 1 - mask.members[i]);
    }
    off[x] = g;
  }
  return off;
}

namespace {

// d_keep x d_rest reshape of psi with keep indices as rows.
Eigen::MatrixXcd gather_matrix(const StateVector& psi,
                               const SubsystemMask& keep) {
  const SubsystemMask rest = keep.complement();
  const auto koff = scatter_offsets(keep);
  const auto roff = scatter_offsets(rest);
  Eigen::MatrixXcd m(std::int64_t(koff.size()), std::int64_t(roff.size()));
  for (std::size_t i = 0; i < koff.size(); ++i)
    for (std::size_t j = 0; j < roff.size(); ++j)
      m(std::int64_t(i), std::int64_t(j)) =
          psi.amplitudes()[std::int64_t(koff[i] | roff[j])];
  return m;
}

}  // namespace

DensityOperator partial_trace(const StateVector& psi,
                              const SubsystemMask& keep) {
  if (keep.total_qubits != psi.n_qubits())
    throw std::invalid_argument("partial_trace: mask/state size mismatch");
  if (keep.empty())
    throw std::invalid_argument("partial_trace: empty keep set");
  if (psi.is_zero())
    throw std::invalid_argument("partial_trace: zero vector has no marginal");
  Eigen::MatrixXcd m = gather_matrix(psi, keep);
  DensityOperator rho;
  rho.n_qubits = keep.size();
  rho.matrix = m * m.adjoint();
  return rho;
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const SubsystemMask& keep) {
  if (keep.total_qubits != rho.n_qubits)
    throw std::invalid_argument("partial_trace: mask/state size mismatch");
  if (keep.empty())
    throw std::invalid_argument("partial_trace: empty keep set");
  const SubsystemMask rest = keep.complement();
  const auto koff = scatter_offsets(keep);
  const auto roff = scatter_offsets(rest);
  const std::int64_t dk = std::int64_t(koff.size());
  DensityOperator out;
  out.n_qubits = keep.size();
  out.matrix = Eigen::MatrixXcd::Zero(dk, dk);
  for (std::int64_t i = 0; i < dk; ++i)
    for (std::int64_t j = 0; j < dk; ++j) {
      cplx acc = 0.0;
      for (std::size_t r = 0; r < roff.size(); ++r)
        acc += rho.matrix(std::int64_t(koff[std::size_t(i)] | roff[r]),
                          std::int64_t(koff[std::size_t(j)] | roff[r]));
      out.matrix(i, j) = acc;
    }
  return out;
}

double purity(const StateVector& psi, const SubsystemMask& keep) {
  if (keep.total_qubits != psi.n_qubits())
    throw std::invalid_argument("purity: mask/state size mismatch");
  if (keep.empty()) return 1.0;  // Tr(rho_empty^2) convention
  if (keep.size() == keep.total_qubits) return 1.0;
  // Gram matrix of the smaller side; Tr((MM+)^2) = ||M+M||_F^2 either way.
  const SubsystemMask rest = keep.complement();
  const SubsystemMask& side = keep.size() <= rest.size() ? keep : rest;
  Eigen::MatrixXcd m = gather_matrix(psi, side);
  return (m * m.adjoint()).squaredNorm();
}

StateVector wootters_tilde(const StateVector& psi) {
  const int n = psi.n_qubits();
  const std::int64_t d = psi.dim();
  const std::uint64_t full = std::uint64_t(d) - 1;
  // i^n
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx in = ipow[n % 4];
  Eigen::VectorXcd out(d);
  for (std::int64_t i = 0; i < d; ++i) {
    const int pc = popcount64(std::uint64_t(i));
    const double sign = ((n - pc) & 1) ? -1.0 : 1.0;
    out[i] = in * sign * std::conj(psi.amplitudes()[std::int64_t(
                             full ^ std::uint64_t(i))]);
  }
  StateVector t = StateVector::zero_state(n);
  t.amplitudes() = std::move(out);
  return t;
}

DensityOperator wootters_tilde(const DensityOperator& rho) {
  const std::int64_t d = rho.matrix.rows();
  const std::uint64_t full = std::uint64_t(d) - 1;
  Eigen::MatrixXcd out(d, d);
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j) {
      const int s = popcount64(std::uint64_t(i)) + popcount64(std::uint64_t(j));
      const double sign = (s & 1) ? -1.0 : 1.0;
      out(i, j) = sign * std::conj(rho.matrix(
                             std::int64_t(full ^ std::uint64_t(i)),
                             std::int64_t(full ^ std::uint64_t(j))));
    }
  DensityOperator t;
  t.n_qubits = rho.n_qubits;
  t.matrix = std::move(out);
  return t;
}

void apply_single_qubit_unitary(StateVector& psi, int qubit,
                                const Eigen::Matrix2cd& u) {
  const int n = psi.n_qubits();
  if (qubit < 0 || qubit >= n)
    throw std::invalid_argument("apply_single_qubit_unitary: bad qubit");
  const std::int64_t bit = std::int64_t(1) << (n - 1 - qubit);
  auto& a = psi.amplitudes();
  for (std::int64_t i = 0; i < psi.dim(); ++i) {
    if (i & bit) continue;
    const cplx a0 = a[i], a1 = a[i | bit];
    a[i] = u(0, 0) * a0 + u(0, 1) * a1;
    a[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

StateVector read_state_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("state json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("re") ||
      !j.contains("im"))
    throw std::invalid_argument(
        "state json: need object with n_qubits, re, im");
  const int n = j["n_qubits"].get<int>();
  check_qubit_count(n, "state json");
  const auto& re = j["re"];
  const auto& im = j["im"];
  const std::int64_t d = std::int64_t(1) << n;
  if (!re.is_array() || !im.is_array() ||
      std::int64_t(re.size()) != d || std::int64_t(im.size()) != d)
    throw std::invalid_argument("state json: re/im must have 2^n entries");
  Eigen::VectorXcd a(d);
  for (std::int64_t i = 0; i < d; ++i)
    a[i] = cplx(re[std::size_t(i)].get<double>(),
                im[std::size_t(i)].get<double>());
  return StateVector(n, std::move(a));
}

StateVector read_state_json_string(const std::string& text) {
  std::istringstream in(text);
  return read_state_json(in);
}

std::string write_state_json(const StateVector& psi) {
  nlohmann::json j;
  j["n_qubits"] = psi.n_qubits();
  std::vector<double> re(std::size_t(psi.dim())), im(std::size_t(psi.dim()));
  for (std::int64_t i = 0; i < psi.dim(); ++i) {
    re[std::size_t(i)] = psi.amplitudes()[i].real();
    im[std::size_t(i)] = psi.amplitudes()[i].imag();
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

}  // namespace entloc
