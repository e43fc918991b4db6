#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "entloc/haar.hpp"
#include "entloc/rng.hpp"
#include "entloc/state.hpp"
#include "oracles.hpp"

using namespace entloc;

namespace {
constexpr double kRoot2Inv = 0.7071067811865475244;
}

TEST_CASE("subsystem mask validates and complements") {
  SubsystemMask m(5, {3, 1});
  CHECK(m.members == std::vector<int>{1, 3});
  CHECK(m.contains(3));
  CHECK(!m.contains(2));
  CHECK(m.complement().members == std::vector<int>{0, 2, 4});
  CHECK_THROWS_AS(SubsystemMask(5, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SubsystemMask(5, {5}), std::invalid_argument);
  CHECK_THROWS_AS(SubsystemMask(5, {-1}), std::invalid_argument);
}

TEST_CASE("state vector validation") {
  Eigen::VectorXcd v(4);
  v << 1, 0, 0, 0;
  CHECK_NOTHROW(StateVector(2, v));
  Eigen::VectorXcd bad3(3);
  bad3.setZero();
  CHECK_THROWS_AS(StateVector(2, bad3), std::invalid_argument);
  Eigen::VectorXcd unnorm(4);
  unnorm << 0.5, 0, 0, 0;
  CHECK_THROWS_AS(StateVector(2, unnorm), std::invalid_argument);
  // The zero vector is the designated impossible-branch placeholder.
  Eigen::VectorXcd zero(4);
  zero.setZero();
  CHECK(StateVector(2, zero).is_zero());
}

TEST_CASE("factories produce the expected amplitudes") {
  const StateVector g = StateVector::ghz(3);
  CHECK(g.amplitudes()[0].real() == doctest::Approx(kRoot2Inv).epsilon(1e-14));
  CHECK(g.amplitudes()[7].real() == doctest::Approx(kRoot2Inv).epsilon(1e-14));
  CHECK(std::abs(g.amplitudes()[3]) == 0.0);

  // |001> + |010> + |100>, qubit 0 in the most significant position.
  const StateVector w = StateVector::w(3);
  const double r3 = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(w.amplitudes()[1]) == doctest::Approx(r3).epsilon(1e-14));
  CHECK(std::abs(w.amplitudes()[2]) == doctest::Approx(r3).epsilon(1e-14));
  CHECK(std::abs(w.amplitudes()[4]) == doctest::Approx(r3).epsilon(1e-14));
  CHECK(std::abs(w.amplitudes()[0]) == 0.0);

  const StateVector p = StateVector::plus(2);
  for (int i = 0; i < 4; ++i)
    CHECK(p.amplitudes()[i].real() == doctest::Approx(0.5).epsilon(1e-14));

  CHECK(StateVector::basis_state(3, 5).amplitudes()[5] == cplx(1, 0));

  // zero_state is the impossible-branch sentinel, not |0...0>.
  const StateVector sentinel = StateVector::zero_state(2);
  CHECK(sentinel.is_zero());
  CHECK(sentinel.amplitudes().squaredNorm() == 0.0);
}

TEST_CASE("tensor product stacks registers") {
  const StateVector bell = StateVector::ghz(2);
  const StateVector z = StateVector::basis_state(1, 0);
  const StateVector t = tensor_product(bell, z);
  CHECK(t.n_qubits() == 3);
  // (|000> + |110>)/sqrt(2): indices 0 and 6.
  CHECK(std::abs(t.amplitudes()[0]) == doctest::Approx(kRoot2Inv));
  CHECK(std::abs(t.amplitudes()[6]) == doctest::Approx(kRoot2Inv));
  CHECK(std::abs(t.amplitudes()[4]) == 0.0);
}

TEST_CASE("partial trace matches the direct-summation oracle") {
  auto rng = make_engine(11, 1);
  for (int n = 2; n <= 5; ++n) {
    const StateVector psi = sample_haar(n, rng);
    for (const std::vector<int>& keep :
         {std::vector<int>{0}, std::vector<int>{n - 1},
          std::vector<int>{0, n - 1}, std::vector<int>{1}}) {
      const DensityOperator rho = partial_trace(psi, SubsystemMask(n, keep));
      const Eigen::MatrixXcd ref =
          oracles::reduced_density(psi.amplitudes(), n, keep);
      CHECK((rho.matrix - ref).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("density-operator partial trace agrees with the pure-state path") {
  auto rng = make_engine(12, 1);
  const StateVector psi = sample_haar(4, rng);
  const SubsystemMask keep(4, {1, 2});
  const DensityOperator a = partial_trace(psi, keep);
  const DensityOperator b = partial_trace(density(psi), keep);
  CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("purity matches the oracle and known values") {
  auto rng = make_engine(13, 1);
  const StateVector psi = sample_haar(5, rng);
  for (const std::vector<int>& keep :
       {std::vector<int>{0}, std::vector<int>{2, 4},
        std::vector<int>{0, 1, 2}, std::vector<int>{0, 1, 2, 3}}) {
    CHECK(purity(psi, SubsystemMask(5, keep)) ==
          doctest::Approx(oracles::purity(psi.amplitudes(), 5, keep))
              .epsilon(1e-11));
  }
  CHECK(purity(StateVector::ghz(2), SubsystemMask(2, {0})) ==
        doctest::Approx(0.5).epsilon(1e-14));
  // Purity over the full register is 1 for any pure state.
  CHECK(purity(psi, SubsystemMask(5, {0, 1, 2, 3, 4})) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("wootters tilde of the Bell state") {
  const StateVector bell = StateVector::ghz(2);
  const StateVector t = wootters_tilde(bell);
  // sigma_y tensor sigma_y flips |00>+|11> to -(|00>+|11>).
  CHECK(std::abs(t.amplitudes()[0] + bell.amplitudes()[0]) < 1e-14);
  CHECK(std::abs(t.amplitudes()[3] + bell.amplitudes()[3]) < 1e-14);
  CHECK(std::abs(bell.amplitudes().dot(t.amplitudes())) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("tilde is an involution up to (-1)^n") {
  auto rng = make_engine(14, 1);
  for (int n = 2; n <= 5; ++n) {
    const StateVector psi = sample_haar(n, rng);
    const StateVector tt = wootters_tilde(wootters_tilde(psi));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    CHECK((tt.amplitudes() - sign * psi.amplitudes()).norm() < 1e-12);
  }
}

TEST_CASE("density tilde matches the pure-state tilde") {
  auto rng = make_engine(15, 1);
  const StateVector psi = sample_haar(3, rng);
  const DensityOperator rt = wootters_tilde(density(psi));
  const DensityOperator tr = density(wootters_tilde(psi));
  CHECK((rt.matrix - tr.matrix).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("single-qubit unitary acts on the addressed qubit") {
  Eigen::Matrix2cd had;
  had << 1, 1, 1, -1;
  had *= kRoot2Inv;
  StateVector psi = StateVector::basis_state(2, 0);
  apply_single_qubit_unitary(psi, 0, had);
  // H on qubit 0 of |00>: (|00> + |10>)/sqrt(2), indices 0 and 2.
  CHECK(std::abs(psi.amplitudes()[0]) == doctest::Approx(kRoot2Inv));
  CHECK(std::abs(psi.amplitudes()[2]) == doctest::Approx(kRoot2Inv));
  CHECK(std::abs(psi.amplitudes()[1]) == 0.0);

  StateVector phi = StateVector::basis_state(2, 0);
  apply_single_qubit_unitary(phi, 1, had);
  CHECK(std::abs(phi.amplitudes()[1]) == doctest::Approx(kRoot2Inv));

  // Unitarity is preserved and unitaries compose.
  auto rng = make_engine(16, 1);
  StateVector h = sample_haar(3, rng);
  const Eigen::Matrix2cd u = sample_haar_unitary(2, rng);
  StateVector h2 = h;
  apply_single_qubit_unitary(h2, 1, u);
  CHECK(h2.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));
  apply_single_qubit_unitary(h2, 1, u.adjoint());
  CHECK((h2.amplitudes() - h.amplitudes()).norm() < 1e-12);
}

TEST_CASE("state JSON round trip") {
  auto rng = make_engine(17, 1);
  const StateVector psi = sample_haar(3, rng);
  const StateVector back = read_state_json_string(write_state_json(psi));
  CHECK(back.n_qubits() == 3);
  CHECK((back.amplitudes() - psi.amplitudes()).norm() < 1e-12);

  const StateVector bell =
      read_state_json_string("{\"n_qubits\":2,\"re\":[0.7071067811865476,0,0,"
                             "0.7071067811865476],\"im\":[0,0,0,0]}");
  CHECK(std::abs(bell.amplitudes().dot(StateVector::ghz(2).amplitudes())) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(read_state_json_string("not json"), std::invalid_argument);
  CHECK_THROWS_AS(
      read_state_json_string("{\"n_qubits\":2,\"re\":[1],\"im\":[0]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      read_state_json_string("{\"n_qubits\":2,\"re\":[1,0,0,0]}"),
      std::invalid_argument);
}

TEST_CASE("scatter offsets place subset bits at member positions") {
  // Members {0, 2} of 3 qubits: subset bit 0 of x is qubit 2 (global bit 0),
  // subset bit 1 of x is qubit 0 (global bit 2).
  const auto offs = scatter_offsets(SubsystemMask(3, {0, 2}));
  REQUIRE(offs.size() == 4);
  CHECK(offs[0] == 0);
  CHECK(offs[1] == 1);
  CHECK(offs[2] == 4);
  CHECK(offs[3] == 5);
}
