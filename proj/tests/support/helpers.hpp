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

#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "azoswitch/qcore.hpp"

namespace azoswitch::testing {

using Rng = std::mt19937_64;

inline QuantumState random_state(Rng& rng, int qubits) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(Eigen::Index{1} << qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(gauss(rng), gauss(rng));
  return QuantumState::normalized(std::move(v));
}

inline Eigen::MatrixXcd random_hermitian(Rng& rng, Eigen::Index dim, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, scale);
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  }
  return 0.5 * (g + g.adjoint());
}

// Unitary from a Gram-Schmidt (QR) of a complex Gaussian matrix; does not go
// through matrix_exponential.
inline Operator random_unitary(Rng& rng, int qubits) {
  std::normal_distribution<double> gauss;
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  return Operator::propagator(qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim));
}

// Concurrence of a pure 2-qubit state from the purity of the reduced state
// of qubit 0: C = sqrt(2 (1 - Tr rho_A^2)).
inline double concurrence_by_purity(const QuantumState& psi) {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int k = 0; k < 2; ++k) rho(a, b) += psi[2 * a + k] * std::conj(psi[2 * b + k]);
    }
  }
  const double purity = (rho * rho).trace().real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

// exp(-i H t) by scaling and squaring of a truncated Taylor series. Slow but
// independent of the eigen-decomposition used by the library.
inline Eigen::MatrixXcd expm_taylor(const Eigen::MatrixXcd& h, double t) {
  const Eigen::MatrixXcd a = cplx(0, -t) * h;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (std::ldexp(norm, -squarings) > 0.5) ++squarings;
  const Eigen::MatrixXcd scaled = a * std::ldexp(1.0, -squarings);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(h.rows(), h.cols());
  Eigen::MatrixXcd sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace azoswitch::testing
