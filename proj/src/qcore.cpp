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

#include "azoswitch/qcore.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace azoswitch {
namespace {

std::atomic<double> g_tolerance{1e-12};

int qubits_for_dim(Eigen::Index dim, const char* what) {
  if (dim < 2 || !std::has_single_bit(static_cast<unsigned long long>(dim))) {
    throw std::invalid_argument(std::string(what) + " dimension " + std::to_string(dim) +
                                " is not a power of two >= 2");
  }
  const int qubits = std::countr_zero(static_cast<unsigned long long>(dim));
  if (qubits > kMaxQubits) {
    throw std::invalid_argument(std::string(what) + " exceeds " + std::to_string(kMaxQubits) +
                                " qubits");
  }
  return qubits;
}

double entry_scale(const Eigen::MatrixXcd& m) {
  return std::max(1.0, m.cwiseAbs().maxCoeff());
}

const Eigen::Matrix2cd& pauli(Axis axis) {
  static const Eigen::Matrix2cd x = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd y =
      (Eigen::Matrix2cd() << 0, cplx(0, -1), cplx(0, 1), 0).finished();
  static const Eigen::Matrix2cd z = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  switch (axis) {
    case Axis::x:
      return x;
    case Axis::y:
      return y;
    case Axis::z:
      break;
  }
  return z;
}

void check_qubit(int qubit, int qubits) {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw std::out_of_range("qubit count " + std::to_string(qubits) + " out of range [1, " +
                            std::to_string(kMaxQubits) + "]");
  }
  if (qubit < 0 || qubit >= qubits) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                            std::to_string(qubits) + " qubits");
  }
}

}  // namespace

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument("tolerance must be positive and finite");
  }
  g_tolerance.store(value, std::memory_order_relaxed);
}

QuantumState::QuantumState(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)), qubits_(qubits_for_dim(amplitudes_.size(), "state")) {
  if (!amplitudes_.allFinite()) {
    throw std::invalid_argument("state has non-finite amplitudes");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kMisuseGuard) {
    throw std::invalid_argument("state is not normalized (norm " + std::to_string(norm) + ")");
  }
}

QuantumState QuantumState::normalized(Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return QuantumState(std::move(amplitudes));
}

cplx QuantumState::inner(const QuantumState& other) const {
  if (dim() != other.dim()) {
    throw std::invalid_argument("inner product of states with different dimensions");
  }
  return amplitudes_.dot(other.amplitudes_);
}

Operator::Operator(Eigen::MatrixXcd entries, OperatorKind kind)
    : entries_(std::move(entries)), qubits_(0), kind_(kind) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("operator must be square, got " + std::to_string(entries_.rows()) +
                                "x" + std::to_string(entries_.cols()));
  }
  qubits_ = qubits_for_dim(entries_.rows(), "operator");
  if (!entries_.allFinite()) {
    throw std::invalid_argument("operator has non-finite entries");
  }
  if (kind_ == OperatorKind::hamiltonian && !is_hermitian(*this, tolerance())) {
    throw std::invalid_argument("hamiltonian-tagged operator is not Hermitian");
  }
  if (kind_ == OperatorKind::propagator && !is_unitary(*this, tolerance())) {
    throw std::invalid_argument("propagator-tagged operator is not unitary");
  }
}

Operator Operator::hamiltonian(Eigen::MatrixXcd entries) {
  return Operator(std::move(entries), OperatorKind::hamiltonian);
}

Operator Operator::propagator(Eigen::MatrixXcd entries) {
  return Operator(std::move(entries), OperatorKind::propagator);
}

Operator Operator::identity(int qubits) {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw std::out_of_range("qubit count out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  return Operator(Eigen::MatrixXcd::Identity(dim, dim), OperatorKind::propagator);
}

Operator Operator::adjoint() const { return Operator(entries_.adjoint(), kind_); }

Operator operator*(const Operator& lhs, const Operator& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw std::invalid_argument("operator product dimension mismatch");
  }
  const bool unitary =
      lhs.kind() == OperatorKind::propagator && rhs.kind() == OperatorKind::propagator;
  return Operator(lhs.entries_ * rhs.entries_,
                  unitary ? OperatorKind::propagator : OperatorKind::generic);
}

Operator operator+(const Operator& lhs, const Operator& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw std::invalid_argument("operator sum dimension mismatch");
  }
  const bool hermitian =
      lhs.kind() == OperatorKind::hamiltonian && rhs.kind() == OperatorKind::hamiltonian;
  return Operator(lhs.entries_ + rhs.entries_,
                  hermitian ? OperatorKind::hamiltonian : OperatorKind::generic);
}

Operator operator-(const Operator& lhs, const Operator& rhs) { return lhs + (-1.0) * rhs; }

Operator operator*(double scale, const Operator& op) {
  return Operator(scale * op.entries_, op.kind() == OperatorKind::hamiltonian
                                           ? OperatorKind::hamiltonian
                                           : OperatorKind::generic);
}

bool is_hermitian(const Operator& op, double tol) {
  const auto& m = op.matrix();
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * entry_scale(m);
}

bool is_unitary(const Operator& op, double tol) {
  const auto& m = op.matrix();
  const auto dim = m.rows();
  return (m.adjoint() * m - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() <= tol;
}

double max_abs_diff(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("max_abs_diff dimension mismatch");
  }
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

Operator kron(const Operator& lhs, const Operator& rhs) {
  const auto& a = lhs.matrix();
  const auto& b = rhs.matrix();
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  OperatorKind kind = OperatorKind::generic;
  if (lhs.kind() == OperatorKind::propagator && rhs.kind() == OperatorKind::propagator) {
    kind = OperatorKind::propagator;
  }
  return Operator(std::move(out), kind);
}

QuantumState kron(const QuantumState& lhs, const QuantumState& rhs) {
  const auto& a = lhs.amplitudes();
  const auto& b = rhs.amplitudes();
  Eigen::VectorXcd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return QuantumState(std::move(out));
}

Operator embed_single_qubit(const Eigen::Matrix2cd& gate, int qubit, int qubits,
                            OperatorKind kind) {
  check_qubit(qubit, qubits);
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  const int shift = qubits - 1 - qubit;  // qubit 0 is the most significant bit
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index row = 0; row < dim; ++row) {
    const int row_bit = static_cast<int>((row >> shift) & 1);
    for (int col_bit = 0; col_bit < 2; ++col_bit) {
      const Eigen::Index col = (row & ~(Eigen::Index{1} << shift)) |
                               (static_cast<Eigen::Index>(col_bit) << shift);
      out(row, col) = gate(row_bit, col_bit);
    }
  }
  return Operator(std::move(out), kind);
}

QuantumState basis_state(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("basis label must have 1 to " + std::to_string(kMaxQubits) +
                                " bits");
  }
  Eigen::Index index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("basis label contains non-binary character '" +
                                  std::string(1, c) + "'");
    }
    index = (index << 1) | (c == '1' ? 1 : 0);
  }
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(Eigen::Index{1} << bits.size());
  amplitudes(index) = 1.0;
  return QuantumState(std::move(amplitudes));
}

QuantumState product_state(std::string_view tokens) {
  if (tokens.empty() || tokens.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("product-state label must have 1 to " +
                                std::to_string(kMaxQubits) + " factors");
  }
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd out = Eigen::VectorXcd::Ones(1);
  for (char c : tokens) {
    Eigen::Vector2cd factor;
    switch (c) {
      case '0':
        factor << 1, 0;
        break;
      case '1':
        factor << 0, 1;
        break;
      case '+':
        factor << h, h;
        break;
      case '-':
        factor << h, -h;
        break;
      default:
        throw std::invalid_argument("product-state label contains invalid character '" +
                                    std::string(1, c) + "'");
    }
    Eigen::VectorXcd next(out.size() * 2);
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      next.segment(2 * i, 2) = out(i) * factor;
    }
    out = std::move(next);
  }
  return QuantumState(std::move(out));
}

Operator pauli_half(Axis axis, int qubit, int qubits) {
  return embed_single_qubit(0.5 * pauli(axis), qubit, qubits, OperatorKind::hamiltonian);
}

Operator hadamard(int qubit, int qubits) {
  const double h = 1.0 / std::sqrt(2.0);
  const Eigen::Matrix2cd gate = (Eigen::Matrix2cd() << h, h, h, -h).finished();
  return embed_single_qubit(gate, qubit, qubits, OperatorKind::propagator);
}

QuantumState apply(const Operator& op, const QuantumState& state) {
  if (op.dim() != state.dim()) {
    throw std::invalid_argument("operator dimension " + std::to_string(op.dim()) +
                                " does not match state dimension " + std::to_string(state.dim()));
  }
  Eigen::VectorXcd out = op.matrix() * state.amplitudes();
  const double norm = out.norm();
  if (std::abs(norm - 1.0) > kMisuseGuard) {
    throw std::domain_error("operator changed the state norm to " + std::to_string(norm) +
                            "; it is not unitary");
  }
  return QuantumState(std::move(out));
}

double concurrence(std::span<const cplx> a) {
  if (a.size() != 4) {
    throw std::invalid_argument("concurrence needs a 2-qubit state (4 amplitudes), got " +
                                std::to_string(a.size()));
  }
  double norm2 = 0.0;
  for (const cplx& v : a) norm2 += std::norm(v);
  if (std::abs(std::sqrt(norm2) - 1.0) > kMisuseGuard) {
    throw std::invalid_argument("concurrence input is not normalized");
  }
  return std::min(1.0, 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]));
}

double concurrence(const QuantumState& state) {
  const auto& amps = state.amplitudes();
  return concurrence(std::span<const cplx>(amps.data(), static_cast<std::size_t>(amps.size())));
}

double fidelity(const QuantumState& a, const QuantumState& b) { return std::norm(a.inner(b)); }

Operator matrix_exponential(const Operator& hamiltonian, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("matrix_exponential time must be finite");
  }
  if (!is_hermitian(hamiltonian, kMisuseGuard)) {
    throw std::invalid_argument("matrix_exponential input is not Hermitian");
  }
  const Eigen::MatrixXcd h = 0.5 * (hamiltonian.matrix() + hamiltonian.matrix().adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();
  Eigen::VectorXcd phases(eigenvalues.size());
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    phases(k) = std::polar(1.0, -eigenvalues(k) * t);
  }
  const auto& v = solver.eigenvectors();
  return Operator::propagator(v * phases.asDiagonal() * v.adjoint());
}

}  // namespace azoswitch
