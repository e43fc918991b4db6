#pragma once

// Direct-summation reference implementations.  Everything here rebuilds its
// answer from explicit amplitude-index loops and owns its bit arithmetic;
// none of it calls the library's partial-trace, measurement or graph code.
// Shared convention: qubit 0 is the most significant bit of an amplitude
// index, and subset indices put member 0 in their most significant bit.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracles {

using cplx = std::complex<double>;

inline std::uint64_t compose_index(const std::vector<int>& qubits,
                                   std::uint64_t sub,
                                   const std::vector<int>& rest,
                                   std::uint64_t rest_bits, int n) {
  std::uint64_t g = 0;
  const int k = static_cast<int>(qubits.size());
  for (int j = 0; j < k; ++j)
    if ((sub >> (k - 1 - j)) & 1u) g |= std::uint64_t(1) << (n - 1 - qubits[j]);
  const int r = static_cast<int>(rest.size());
  for (int j = 0; j < r; ++j)
    if ((rest_bits >> (r - 1 - j)) & 1u)
      g |= std::uint64_t(1) << (n - 1 - rest[j]);
  return g;
}

inline std::vector<int> complement_of(const std::vector<int>& keep, int n) {
  std::vector<int> rest;
  for (int q = 0; q < n; ++q) {
    bool in = false;
    for (int m : keep) in = in || (m == q);
    if (!in) rest.push_back(q);
  }
  return rest;
}

inline Eigen::MatrixXcd reduced_density(const Eigen::VectorXcd& amps, int n,
                                        const std::vector<int>& keep) {
  const std::vector<int> rest = complement_of(keep, n);
  const std::uint64_t dk = std::uint64_t(1) << keep.size();
  const std::uint64_t dr = std::uint64_t(1) << rest.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dk, dk);
  for (std::uint64_t i = 0; i < dk; ++i)
    for (std::uint64_t j = 0; j < dk; ++j)
      for (std::uint64_t r = 0; r < dr; ++r)
        rho(i, j) += amps[compose_index(keep, i, rest, r, n)] *
                     std::conj(amps[compose_index(keep, j, rest, r, n)]);
  return rho;
}

inline double purity(const Eigen::VectorXcd& amps, int n,
                     const std::vector<int>& keep) {
  const Eigen::MatrixXcd rho = reduced_density(amps, n, keep);
  return (rho * rho).trace().real();
}

inline double ce(const Eigen::VectorXcd& amps, int n,
                 const std::vector<int>& s) {
  const int k = static_cast<int>(s.size());
  double sum = 0.0;
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << k); ++m) {
    std::vector<int> gamma;
    for (int j = 0; j < k; ++j)
      if ((m >> j) & 1u) gamma.push_back(s[j]);
    sum += gamma.empty() ? 1.0 : purity(amps, n, gamma);
  }
  return 1.0 - std::ldexp(sum, -k);
}

// |<psi| sigma_y^n |psi*>| with sigma_y applied one qubit at a time.
inline double ntangle(const Eigen::VectorXcd& amps, int n) {
  Eigen::VectorXcd v = amps.conjugate();
  for (int q = 0; q < n; ++q) {
    Eigen::VectorXcd w(v.size());
    const std::uint64_t mask = std::uint64_t(1) << (n - 1 - q);
    for (std::uint64_t g = 0; g < std::uint64_t(v.size()); ++g)
      w[g] = (g & mask) ? cplx(0, 1) * v[g ^ mask] : cplx(0, -1) * v[g ^ mask];
    v.swap(w);
  }
  return std::abs(amps.dot(v));
}

// <psi|H|psi> for the periodic TFIM, summed Pauli term by Pauli term.
inline double tfim_energy(const Eigen::VectorXcd& amps, int n, double j,
                          double h, double h_x) {
  double e = 0.0;
  const std::uint64_t dim = std::uint64_t(1) << n;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t mz = std::uint64_t(1) << (n - 1 - q);
    const int qn = (q + 1) % n;
    const std::uint64_t mb = mz | (std::uint64_t(1) << (n - 1 - qn));
    for (std::uint64_t g = 0; g < dim; ++g) {
      const double p = std::norm(amps[g]);
      e += -h * ((g & mz) ? -1.0 : 1.0) * p;
      e += -h_x * std::real(std::conj(amps[g]) * amps[g ^ mz]);
      e += -j * std::real(std::conj(amps[g]) * amps[g ^ mb]);
    }
  }
  return e;
}

}  // namespace oracles
