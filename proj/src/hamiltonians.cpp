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

#include "azoswitch/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

namespace azoswitch {

void require_heteronuclear(const TwoSpinParameters& p) {
  if (!(std::abs(p.omega1 - p.omega2) > 0.0)) {
    throw std::invalid_argument("heteronuclear pair requires omega1 != omega2");
  }
}

Operator lab_hamiltonian(const TwoSpinParameters& p) {
  if (!std::isfinite(p.omega1) || !std::isfinite(p.omega2) || !std::isfinite(p.j)) {
    throw std::invalid_argument("lab_hamiltonian parameters must be finite");
  }
  Operator coupling = kron(pauli_half(Axis::x, 0, 1), pauli_half(Axis::x, 0, 1)) +
                      kron(pauli_half(Axis::y, 0, 1), pauli_half(Axis::y, 0, 1)) +
                      kron(pauli_half(Axis::z, 0, 1), pauli_half(Axis::z, 0, 1));
  // kron of two Hamiltonian-tagged factors is generic; re-tag the Hermitian sum.
  Operator zeeman = (-p.omega1) * pauli_half(Axis::z, 0, 2) + (-p.omega2) * pauli_half(Axis::z, 1, 2);
  return Operator::hamiltonian(zeeman.matrix() + p.j * coupling.matrix());
}

Operator secular_hamiltonian(double j) {
  if (!std::isfinite(j)) {
    throw std::invalid_argument("coupling must be finite");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  const double q = j / 4.0;
  m.diagonal() << q, -q, -q, q;
  return Operator::hamiltonian(std::move(m));
}

Operator u_rot(double j, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("u_rot time must be finite");
  }
  if (!std::isfinite(j)) {
    throw std::invalid_argument("coupling must be finite");
  }
  const double phase = j * t / 4.0;
  const cplx minus = std::polar(1.0, -phase);
  const cplx plus = std::polar(1.0, phase);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m.diagonal() << minus, plus, plus, minus;
  return Operator::propagator(std::move(m));
}

Operator frame_unitary(double omega1, double omega2, double t) {
  if (!std::isfinite(t) || !std::isfinite(omega1) || !std::isfinite(omega2)) {
    throw std::invalid_argument("frame_unitary arguments must be finite");
  }
  auto rotation = [t](double omega) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -omega * t / 2.0);
    m(1, 1) = std::polar(1.0, omega * t / 2.0);
    return Operator::propagator(std::move(m));
  };
  return kron(rotation(omega1), rotation(omega2));
}

QuantumState rotating_frame_state(const TwoSpinParameters& p, const QuantumState& initial,
                                  double t) {
  require_heteronuclear(p);
  if (initial.qubits() != 2) {
    throw std::invalid_argument("rotating_frame_state needs a 2-qubit state");
  }
  const QuantumState lab = apply(matrix_exponential(lab_hamiltonian(p), t), initial);
  return apply(frame_unitary(p.omega1, p.omega2, t), lab);
}

}  // namespace azoswitch
