#include "entloc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entloc {

std::string measure_name(const MeasureKind& kind) {
  switch (kind.variant) {
    case Measure::NTangle: return "ntangle";
    case Measure::GmeConcurrence: return "gme";
    case Measure::ConcentratableEntanglement: return "ce";
    case Measure::SqrtConcentratableEntanglement: return "sqrtce";
  }
  return "?";
}

double n_tangle(const StateVector& psi) {
  if (psi.is_zero()) return 0.0;
  const std::int64_t d = psi.dim();
  const std::uint64_t full = std::uint64_t(d) - 1;
  // <psi|tilde psi> = i^n (-1)^n sum_i (-1)^{popcount(i)} psi_i psi_{~i};
  // only the modulus is reported, so the prefactor drops.
  cplx acc = 0.0;
  for (std::int64_t i = 0; i < d; ++i) {
    const double sign = (popcount64(std::uint64_t(i)) & 1) ? -1.0 : 1.0;
    acc += sign * psi.amplitudes()[i] *
           psi.amplitudes()[std::int64_t(full ^ std::uint64_t(i))];
  }
  return std::min(std::abs(acc), 1.0);
}

double gme_concurrence(const StateVector& psi) {
  if (psi.is_zero()) return 0.0;
  const int n = psi.n_qubits();
  if (n < 2)
    throw std::invalid_argument("gme_concurrence: need at least 2 qubits");
  double min_val = 2.0;
  // Each bipartition once: gamma ranges over subsets containing qubit n-1.
  const std::uint64_t d = std::uint64_t(1) << n;
  for (std::uint64_t g = 1; g < d; g += 2) {
    if (g == d - 1) continue;  // proper subset only
    std::vector<int> members;
    for (int q = 0; q < n; ++q)
      if ((g >> (n - 1 - q)) & 1u) members.push_back(q);
    const double p = purity(psi, SubsystemMask(n, members));
    min_val = std::min(min_val, std::sqrt(std::max(0.0, 2.0 * (1.0 - p))));
  }
  return min_val;
}

double concentratable_entanglement(const StateVector& psi,
                                   const SubsystemMask& s) {
  if (psi.is_zero()) return 0.0;
  if (s.empty())
    throw std::invalid_argument("concentratable_entanglement: empty s");
  if (s.total_qubits != psi.n_qubits())
    throw std::invalid_argument("concentratable_entanglement: mask mismatch");
  if (s.size() > 12)
    throw std::invalid_argument("concentratable_entanglement: |s| > 12");
  const int k = s.size();
  double sum = 0.0;
  for (std::uint64_t g = 0; g < (std::uint64_t(1) << k); ++g) {
    if (g == 0) {
      sum += 1.0;  // empty-set purity convention
      continue;
    }
    std::vector<int> members;
    for (int i = 0; i < k; ++i)
      if ((g >> i) & 1u) members.push_back(s.members[std::size_t(i)]);
    sum += purity(psi, SubsystemMask(psi.n_qubits(), members));
  }
  const double ce = 1.0 - std::ldexp(sum, -k);
  return std::clamp(ce, 0.0, 1.0);
}

double evaluate(const MeasureKind& kind, const StateVector& psi) {
  if (psi.is_zero()) return 0.0;
  switch (kind.variant) {
    case Measure::NTangle:
      return n_tangle(psi);
    case Measure::GmeConcurrence:
      return gme_concurrence(psi);
    case Measure::ConcentratableEntanglement:
      return concentratable_entanglement(
          psi, SubsystemMask(psi.n_qubits(), kind.s));
    case Measure::SqrtConcentratableEntanglement:
      return std::sqrt(concentratable_entanglement(
          psi, SubsystemMask(psi.n_qubits(), kind.s)));
  }
  throw std::invalid_argument("evaluate: unknown measure");
}

MeasureKind rebase_to_subsystem(const MeasureKind& kind,
                                const SubsystemMask& b) {
  if (!kind.needs_s()) return kind;
  MeasureKind out = kind;
  out.s.clear();
  for (int q : kind.s) {
    auto it = std::lower_bound(b.members.begin(), b.members.end(), q);
    if (it == b.members.end() || *it != q)
      throw std::invalid_argument(
          "rebase_to_subsystem: s must be a subset of the kept qubits");
    out.s.push_back(static_cast<int>(it - b.members.begin()));
  }
  return out;
}

}  // namespace entloc
