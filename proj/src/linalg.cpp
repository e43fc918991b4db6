#include "entloc/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <stdexcept>

namespace entloc {

std::pair<Eigen::VectorXd, Eigen::MatrixXcd> hermitian_eig(
    const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: solver failed");
  const Eigen::Index d = h.rows();
  Eigen::VectorXd vals(d);
  Eigen::MatrixXcd vecs(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {  // Eigen sorts ascending
    vals[i] = es.eigenvalues()[d - 1 - i];
    vecs.col(i) = es.eigenvectors().col(d - 1 - i);
  }
  return {std::move(vals), std::move(vecs)};
}

namespace {

// Eigenvalues of a PSD matrix below d * eps * lambda_max are arithmetic
// debris of the solver; the square root would lift them to the 1e-8 scale,
// so they are treated as exact zeros.
Eigen::VectorXd clamp_psd_spectrum(const Eigen::VectorXd& vals) {
  if (vals.size() == 0) return vals;
  const double eps = std::numeric_limits<double>::epsilon();
  const double floor_at =
      double(vals.size()) * eps * std::max(vals.maxCoeff(), 0.0);
  return (vals.array() < floor_at).select(0.0, vals);
}

}  // namespace

Eigen::MatrixXcd sqrt_psd(const Eigen::MatrixXcd& m) {
  auto [vals, vecs] = hermitian_eig(m);
  if (vals.size() > 0 && vals.minCoeff() < -1e-8)
    throw std::runtime_error("sqrt_psd: matrix is not PSD");
  Eigen::VectorXd r = clamp_psd_spectrum(vals).cwiseSqrt();
  return vecs * r.asDiagonal() * vecs.adjoint();
}

double fidelity(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols() ||
      rho.rows() != rho.cols())
    throw std::invalid_argument("fidelity: dimension mismatch");
  Eigen::MatrixXcd sr = sqrt_psd(rho);
  Eigen::MatrixXcd m = sr * sigma * sr;
  auto [vals, vecs] = hermitian_eig(m);
  if (vals.size() > 0 && vals.minCoeff() < -1e-8)
    throw std::runtime_error("fidelity: inner matrix is not PSD");
  double f = clamp_psd_spectrum(vals).cwiseSqrt().sum();
  return std::min(f, 1.0 + 1e-12);
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  auto [vals, vecs] = hermitian_eig(a - b);
  return vals.cwiseAbs().sum();
}

double max_singular_value(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

// Takagi through the real embedding B = [[Re a, Im a], [Im a, -Re a]]:
// B (x; y) = s (x; y) is equivalent to a conj(u) = s u for u = x + i y, and
// the spectrum of B is the +-pair extension of the singular values of a.
// Eigenvectors with s > 0 give complex-orthonormal u automatically (their
// J-images J(x;y) = (-y;x) live in the -s eigenspace); inside the zero
// eigenspace the J-image stays at 0, so a basis is grown greedily, removing
// each picked vector together with its J-image.
TakagiResult takagi(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("takagi: matrix is not square");
  const Eigen::Index n = a.rows();
  if ((a - a.transpose()).cwiseAbs().maxCoeff() >
      1e-10 * std::max(1.0, a.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("takagi: matrix is not symmetric");
  Eigen::MatrixXcd s = 0.5 * (a + a.transpose());

  Eigen::MatrixXd b(2 * n, 2 * n);
  b.topLeftCorner(n, n) = s.real();
  b.topRightCorner(n, n) = s.imag();
  b.bottomLeftCorner(n, n) = s.imag();
  b.bottomRightCorner(n, n) = -s.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("takagi: eigensolver failed");

  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  const double ztol = 1e-12 * scale;

  std::vector<Eigen::Index> pos;
  std::vector<Eigen::VectorXd> zero_vecs;
  for (Eigen::Index i = 0; i < 2 * n; ++i) {
    const double lam = es.eigenvalues()[i];
    if (lam > ztol)
      pos.push_back(i);
    else if (lam > -ztol)
      zero_vecs.push_back(es.eigenvectors().col(i));
  }

  std::vector<std::pair<double, Eigen::VectorXcd>> cols;
  cols.reserve(std::size_t(n));
  for (Eigen::Index i : pos) {
    Eigen::VectorXd v = es.eigenvectors().col(i);
    Eigen::VectorXcd u(n);
    u.real() = v.head(n);
    u.imag() = v.tail(n);
    cols.emplace_back(es.eigenvalues()[i], std::move(u));
  }

  // Zero block: the +-pairing makes its real dimension even; keep half.
  auto j_image = [n](const Eigen::VectorXd& v) {
    Eigen::VectorXd w(2 * n);
    w.head(n) = -v.tail(n);
    w.tail(n) = v.head(n);
    return w;
  };
  std::vector<Eigen::VectorXd> picked;
  for (auto& cand : zero_vecs) {
    Eigen::VectorXd v = cand;
    for (const auto& p : picked) {
      v -= p.dot(v) * p;
      Eigen::VectorXd jp = j_image(p);
      v -= jp.dot(v) * jp;
    }
    if (v.norm() < 0.5 / std::sqrt(double(2 * n))) continue;  // in the span
    v.normalize();
    picked.push_back(v);
    Eigen::VectorXcd u(n);
    u.real() = v.head(n);
    u.imag() = v.tail(n);
    cols.emplace_back(0.0, std::move(u));
    if (Eigen::Index(cols.size()) == n) break;
  }
  if (Eigen::Index(cols.size()) != n)
    throw std::runtime_error("takagi: failed to assemble a full basis");

  std::stable_sort(cols.begin(), cols.end(),
                   [](const auto& l, const auto& r) { return l.first > r.first; });
  TakagiResult out;
  out.u.resize(n, n);
  out.sigma.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.sigma[i] = cols[std::size_t(i)].first;
    out.u.col(i) = cols[std::size_t(i)].second;
  }
  return out;
}

}  // namespace entloc
