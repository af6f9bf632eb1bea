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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

#include <Eigen/Dense>

namespace azoswitch {

using cplx = std::complex<double>;

// Process-wide absolute tolerance for the Hermitian/unitary checks performed
// when an operator is tagged. Defaults to 1e-12; scaled by max(1, max|entry|)
// for Hermiticity so large lab-frame Hamiltonians are judged relatively.
double tolerance();
void set_tolerance(double value);

// Guard used for misuse detection (norm drift, non-Hermitian exponent input).
inline constexpr double kMisuseGuard = 1e-9;

inline constexpr int kMaxQubits = 8;

// Pure state over the binary-lexicographic basis of n qubits. Qubit 0 is the
// leftmost tensor factor, so for n = 2 the order is |00>, |01>, |10>, |11>.
class QuantumState {
 public:
  // Requires a power-of-two length in [2, 2^8] and a norm within kMisuseGuard
  // of one. The amplitudes are stored as given.
  explicit QuantumState(Eigen::VectorXcd amplitudes);

  // Same dimension rules; rescales to unit norm. Rejects the zero vector.
  static QuantumState normalized(Eigen::VectorXcd amplitudes);

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  cplx operator[](std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  int qubits() const { return qubits_; }
  double norm() const { return amplitudes_.norm(); }

  // <this|other>
  cplx inner(const QuantumState& other) const;

 private:
  Eigen::VectorXcd amplitudes_;
  int qubits_;
};

enum class OperatorKind { generic, hamiltonian, propagator };

// Dense 2^n x 2^n complex matrix. Hamiltonian-tagged operators are checked
// Hermitian and propagator-tagged operators are checked unitary on
// construction, both against tolerance().
class Operator {
 public:
  explicit Operator(Eigen::MatrixXcd entries, OperatorKind kind = OperatorKind::generic);

  static Operator hamiltonian(Eigen::MatrixXcd entries);
  static Operator propagator(Eigen::MatrixXcd entries);
  static Operator identity(int qubits);

  const Eigen::MatrixXcd& matrix() const { return entries_; }
  cplx operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  int qubits() const { return qubits_; }
  OperatorKind kind() const { return kind_; }

  Operator adjoint() const;

  // Products of propagators stay propagators; sums of Hamiltonians and real
  // multiples of Hamiltonians stay Hamiltonians. Everything else is generic.
  friend Operator operator*(const Operator& lhs, const Operator& rhs);
  friend Operator operator+(const Operator& lhs, const Operator& rhs);
  friend Operator operator-(const Operator& lhs, const Operator& rhs);
  friend Operator operator*(double scale, const Operator& op);

 private:
  Eigen::MatrixXcd entries_;
  int qubits_;
  OperatorKind kind_;
};

bool is_hermitian(const Operator& op, double tol);
bool is_unitary(const Operator& op, double tol);

// Max-abs entrywise difference.
double max_abs_diff(const Operator& a, const Operator& b);

// Kronecker product; `lhs` becomes the leftmost (lower-index) factor.
Operator kron(const Operator& lhs, const Operator& rhs);
QuantumState kron(const QuantumState& lhs, const QuantumState& rhs);

// Embeds a 2x2 matrix on `qubit` of an n-qubit register.
Operator embed_single_qubit(const Eigen::Matrix2cd& gate, int qubit, int qubits,
                            OperatorKind kind = OperatorKind::generic);

// Computational basis state, e.g. "10" -> |10>.
QuantumState basis_state(std::string_view bits);

// Product state from single-qubit tokens 0, 1, + and -; "+0" -> |+0>.
QuantumState product_state(std::string_view tokens);

enum class Axis { x, y, z };

// n-qubit embedding of sigma_axis / 2.
Operator pauli_half(Axis axis, int qubit, int qubits);

Operator hadamard(int qubit, int qubits);

// U|psi>. Throws on dimension mismatch or when the result's norm drifts from
// one by more than kMisuseGuard (a non-unitary operator applied as if it
// were one). The result is never renormalized.
QuantumState apply(const Operator& op, const QuantumState& state);

// Pure-state two-qubit concurrence 2|a00 a11 - a01 a10|.
double concurrence(const QuantumState& state);
double concurrence(std::span<const cplx> amplitudes);

// |<a|b>|^2
double fidelity(const QuantumState& a, const QuantumState& b);

// exp(-i H t) by spectral decomposition of the Hermitian input.
Operator matrix_exponential(const Operator& hamiltonian, double t);

}  // namespace azoswitch
