// Copyright 2026 The azoswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "azoswitch/hamiltonians.hpp"
#include "azoswitch/qcore.hpp"
#include "support/helpers.hpp"

using namespace azoswitch;
using azoswitch::testing::Rng;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_amplitudes(const QuantumState& psi, std::initializer_list<cplx> expected,
                      double tol = 1e-12) {
  REQUIRE(psi.dim() == expected.size());
  std::size_t i = 0;
  for (const cplx& e : expected) {
    CHECK(std::abs(psi[i] - e) <= tol);
    ++i;
  }
}

}  // namespace

TEST_CASE("basis_state follows binary-lexicographic order") {
  check_amplitudes(basis_state("00"), {1, 0, 0, 0});
  check_amplitudes(basis_state("10"), {0, 0, 1, 0});
  check_amplitudes(basis_state("01"), {0, 1, 0, 0});
  CHECK(basis_state("101").dim() == 8);
  CHECK(basis_state("101")[5] == cplx(1.0));
}

TEST_CASE("basis_state rejects bad labels") {
  CHECK_THROWS_AS(basis_state("2"), std::invalid_argument);
  CHECK_THROWS_AS(basis_state(""), std::invalid_argument);
  CHECK_THROWS_AS(basis_state("000000000"), std::invalid_argument);
  CHECK_NOTHROW(basis_state("00000000"));
}

TEST_CASE("QuantumState requires unit norm and power-of-two length") {
  CHECK_THROWS_AS(QuantumState(Eigen::VectorXcd::Ones(4)), std::invalid_argument);
  CHECK_THROWS_AS(QuantumState(Eigen::VectorXcd::Ones(3) / std::sqrt(3.0)), std::invalid_argument);
  CHECK_THROWS_AS(QuantumState::normalized(Eigen::VectorXcd::Zero(4)), std::invalid_argument);
  const auto psi = QuantumState::normalized(Eigen::VectorXcd::Ones(4));
  CHECK(std::abs(psi.norm() - 1.0) <= 1e-12);
  CHECK(psi.qubits() == 2);
}

TEST_CASE("pauli_half embeddings") {
  const Operator z1 = pauli_half(Axis::z, 0, 1);
  CHECK(z1(0, 0) == cplx(0.5));
  CHECK(z1(1, 1) == cplx(-0.5));
  CHECK(z1(0, 1) == cplx(0.0));

  const Operator x1 = pauli_half(Axis::x, 0, 1);
  CHECK(x1(0, 1) == cplx(0.5));
  CHECK(x1(1, 0) == cplx(0.5));
  CHECK(x1(0, 0) == cplx(0.0));

  const Operator z_second = pauli_half(Axis::z, 1, 2);
  const double expected[] = {0.5, -0.5, 0.5, -0.5};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(z_second(i, i) == cplx(expected[i]));
  }
  CHECK(max_abs_diff(z_second, Operator(Eigen::MatrixXcd(Eigen::Vector4cd(0.5, -0.5, 0.5, -0.5)
                                                             .asDiagonal()))) == 0.0);

  const Operator y1 = pauli_half(Axis::y, 0, 1);
  CHECK(y1(0, 1) == cplx(0, -0.5));
  CHECK(y1(1, 0) == cplx(0, 0.5));
  CHECK(y1.kind() == OperatorKind::hamiltonian);
}

TEST_CASE("pauli_half rejects out-of-range qubits") {
  CHECK_THROWS_AS(pauli_half(Axis::z, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(pauli_half(Axis::z, -1, 2), std::out_of_range);
  CHECK_THROWS_AS(pauli_half(Axis::z, 0, 9), std::out_of_range);
}

TEST_CASE("hadamard") {
  check_amplitudes(apply(hadamard(0, 1), basis_state("0")), {kInvSqrt2, kInvSqrt2});
  check_amplitudes(apply(hadamard(0, 2), basis_state("00")), {kInvSqrt2, 0, kInvSqrt2, 0});
  CHECK(max_abs_diff(hadamard(0, 1) * hadamard(0, 1), Operator::identity(1)) <= 1e-15);
  CHECK(std::abs(fidelity(apply(hadamard(0, 2), basis_state("00")), product_state("+0")) - 1.0) <=
        1e-15);
  CHECK_THROWS_AS(hadamard(1, 1), std::out_of_range);
}

TEST_CASE("kron puts the left factor on qubit 0") {
  const QuantumState psi = kron(basis_state("1"), basis_state("0"));
  check_amplitudes(psi, {0, 0, 1, 0});
  const Operator z0 = kron(pauli_half(Axis::z, 0, 1), Operator::identity(1));
  CHECK(max_abs_diff(z0, pauli_half(Axis::z, 0, 2)) == 0.0);
}

TEST_CASE("apply") {
  Rng rng(1);
  const QuantumState psi = azoswitch::testing::random_state(rng, 2);
  const QuantumState same = apply(Operator::identity(2), psi);
  CHECK((same.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() == 0.0);

  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(apply(hadamard(0, 1), psi), std::invalid_argument);
  }
  SUBCASE("non-square matrices are not operators") {
    CHECK_THROWS_AS(Operator(Eigen::MatrixXcd::Ones(2, 4)), std::invalid_argument);
    CHECK_THROWS_AS(Operator(Eigen::MatrixXcd::Identity(3, 3)), std::invalid_argument);
  }
  SUBCASE("non-unitary misuse is caught by the norm check") {
    const Operator doubled(2.0 * Eigen::MatrixXcd::Identity(4, 4));
    CHECK_THROWS_AS(apply(doubled, psi), std::domain_error);
  }
  SUBCASE("tagging a non-unitary matrix as a propagator fails") {
    CHECK_THROWS_AS(Operator::propagator(2.0 * Eigen::MatrixXcd::Identity(2, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("concurrence examples") {
  const QuantumState bell =
      QuantumState::normalized((Eigen::Vector4cd() << 1, 0, 0, 1).finished());
  CHECK(std::abs(concurrence(bell) - 1.0) <= 1e-12);
  CHECK(concurrence(product_state("+0")) <= 1e-15);

  // u_rot(J, t)|++> for J t = pi, amplitudes written out by hand:
  // (1/2)(e^{-i pi/4}, e^{i pi/4}, e^{i pi/4}, e^{-i pi/4}).
  const double j = 7.0;
  const double t = std::numbers::pi / j;
  const QuantumState evolved = apply(u_rot(j, t), product_state("++"));
  const cplx m = 0.5 * std::polar(1.0, -std::numbers::pi / 4);
  const cplx p = 0.5 * std::polar(1.0, std::numbers::pi / 4);
  check_amplitudes(evolved, {m, p, p, m});
  const double by_hand = 2.0 * std::abs(m * m - p * p);
  CHECK(std::abs(by_hand - 1.0) <= 1e-12);
  CHECK(std::abs(concurrence(evolved) - 1.0) <= 1e-12);
  CHECK(std::abs(azoswitch::testing::concurrence_by_purity(evolved) - 1.0) <= 1e-7);
}

TEST_CASE("concurrence errors") {
  CHECK_THROWS_AS(concurrence(basis_state("000")), std::invalid_argument);
  const cplx unnormalized[] = {1, 1, 0, 0};
  CHECK_THROWS_AS(concurrence(std::span<const cplx>(unnormalized)), std::invalid_argument);
  const cplx fine[] = {cplx(0.6), cplx(0.0), cplx(0.0), cplx(0.8)};
  CHECK(std::abs(concurrence(std::span<const cplx>(fine)) - 0.96) <= 1e-15);
}

TEST_CASE("matrix_exponential") {
  Rng rng(2);
  SUBCASE("t = 0 gives identity") {
    const Operator h = Operator::hamiltonian(azoswitch::testing::random_hermitian(rng, 4));
    CHECK(max_abs_diff(matrix_exponential(h, 0.0), Operator::identity(2)) <= 1e-14);
  }
  SUBCASE("Ising generator matches the diagonal closed form") {
    const double j = 10.0;
    const double t = 0.1;
    const Operator h = j * kron(Operator::hamiltonian(pauli_half(Axis::z, 0, 1).matrix()),
                                Operator::hamiltonian(pauli_half(Axis::z, 0, 1).matrix()));
    const Operator u = matrix_exponential(Operator::hamiltonian(h.matrix()), t);
    const double phase = j * t / 4;
    const cplx expected[] = {std::polar(1.0, -phase), std::polar(1.0, phase),
                             std::polar(1.0, phase), std::polar(1.0, -phase)};
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        CHECK(std::abs(u(r, c) - (r == c ? expected[r] : cplx(0.0))) <= 1e-12);
      }
    }
  }
  SUBCASE("results are unitary") {
    std::uniform_real_distribution<double> t_dist(-3.0, 3.0);
    for (int k = 0; k < 200; ++k) {
      const Operator h = Operator::hamiltonian(azoswitch::testing::random_hermitian(rng, 4, 5.0));
      CHECK(is_unitary(matrix_exponential(h, t_dist(rng)), 1e-12));
    }
  }
  SUBCASE("agrees with a Taylor series for small generators") {
    const Eigen::MatrixXcd h = azoswitch::testing::random_hermitian(rng, 4, 0.3);
    const double t = 0.7;
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(4, 4);
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k < 40; ++k) {
      term = term * (cplx(0, -t) * h) / static_cast<double>(k);
      sum += term;
    }
    const Operator u = matrix_exponential(Operator::hamiltonian(h), t);
    CHECK((u.matrix() - sum).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("non-Hermitian input") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(matrix_exponential(Operator(m), 1.0), std::invalid_argument);
  }
}

TEST_CASE("oracle agreement for 100 random couplings") {
  Rng rng(3);
  std::uniform_real_distribution<double> j_dist(-50.0, 50.0);
  std::uniform_real_distribution<double> t_dist(0.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    const double j = j_dist(rng);
    const double t = t_dist(rng);
    CHECK(max_abs_diff(matrix_exponential(secular_hamiltonian(j), t), u_rot(j, t)) <= 1e-12);
  }
}

TEST_CASE("property: unitaries preserve the norm") {
  Rng rng(4);
  for (int k = 0; k < 1000; ++k) {
    const QuantumState psi = azoswitch::testing::random_state(rng, 2);
    const Operator u = azoswitch::testing::random_unitary(rng, 2);
    CHECK(std::abs(apply(u, psi).norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("property: concurrence lies in [0, 1] and matches the purity formula") {
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const QuantumState psi = azoswitch::testing::random_state(rng, 2);
    const double c = concurrence(psi);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
    CHECK(std::abs(c - azoswitch::testing::concurrence_by_purity(psi)) <= 1e-7);
  }
}

TEST_CASE("property: concurrence is invariant under local unitaries") {
  Rng rng(6);
  for (int k = 0; k < 1000; ++k) {
    const QuantumState psi = azoswitch::testing::random_state(rng, 2);
    const Operator local = kron(azoswitch::testing::random_unitary(rng, 1),
                                azoswitch::testing::random_unitary(rng, 1));
    CHECK(std::abs(concurrence(apply(local, psi)) - concurrence(psi)) <= 1e-10);
  }
}

TEST_CASE("tolerance setting governs Hermitian tagging") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(0, 1) = cplx(0, 1e-11);
  m(1, 0) = cplx(0, 1e-11);  // anti-Hermitian residue of 2e-11
  CHECK(tolerance() == 1e-12);
  CHECK_THROWS_AS(Operator::hamiltonian(m), std::invalid_argument);
  set_tolerance(1e-10);
  CHECK_NOTHROW(Operator::hamiltonian(m));
  set_tolerance(1e-12);
  CHECK_THROWS_AS(set_tolerance(0.0), std::invalid_argument);
  CHECK_THROWS_AS(set_tolerance(-1.0), std::invalid_argument);
}

TEST_CASE("operator algebra keeps tags where they are guaranteed") {
  const Operator h = pauli_half(Axis::x, 0, 2) + pauli_half(Axis::z, 1, 2);
  CHECK(h.kind() == OperatorKind::hamiltonian);
  CHECK((3.0 * h).kind() == OperatorKind::hamiltonian);
  CHECK((hadamard(0, 2) * hadamard(1, 2)).kind() == OperatorKind::propagator);
  CHECK((h * h).kind() == OperatorKind::generic);
  CHECK(max_abs_diff(h.adjoint(), h) == 0.0);
  CHECK_THROWS_AS(h + Operator::identity(1), std::invalid_argument);
}
