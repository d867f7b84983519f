// Copyright 2026 The sizecon Authors
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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "sizecon/errors.hpp"
#include "sizecon/pauli.hpp"

namespace sizecon {

using cplx = std::complex<double>;
using StateVector = Eigen::VectorXcd;

/// Basis index convention: qubit q is bit (width - 1 - q) of the index, so the
/// binary expansion of an index reads as the bitstring q0 q1 ... q(n-1).
inline std::uint64_t qubit_mask(std::size_t width, std::size_t q) {
  return std::uint64_t{1} << (width - 1 - q);
}

/// Adds coefficient * P into `m` without materializing Kronecker products.
inline void accumulate_dense(Eigen::MatrixXcd& m, const PauliString& p, cplx coefficient) {
  const std::size_t n = p.width();
  std::uint64_t flip = 0;
  for (std::size_t q = 0; q < n; ++q)
    if (p[q] == Pauli::X || p[q] == Pauli::Y) flip |= qubit_mask(n, q);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t col = 0; col < dim; ++col) {
    cplx amp = coefficient;
    for (std::size_t q = 0; q < n; ++q) {
      const bool bit = (col & qubit_mask(n, q)) != 0;
      switch (p[q]) {
        case Pauli::Z: if (bit) amp = -amp; break;
        case Pauli::Y: amp *= bit ? cplx(0, -1) : cplx(0, 1); break;
        default: break;
      }
    }
    m(static_cast<Eigen::Index>(col ^ flip), static_cast<Eigen::Index>(col)) += amp;
  }
}

inline Eigen::MatrixXcd to_dense(const PauliString& p) {
  const auto dim = Eigen::Index{1} << p.width();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  accumulate_dense(m, p, 1.0);
  return m;
}

inline Eigen::MatrixXcd to_dense(const PauliSum& h) {
  if (h.width() > 14) throw InvalidArgument("dense matrix limited to 14 qubits");
  const auto dim = Eigen::Index{1} << h.width();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : h.terms()) accumulate_dense(m, p, c);
  return m;
}

/// Re-expresses a Hermitian 2^n x 2^n matrix in the Pauli basis,
/// c_P = Tr(P M) / 2^n. Fails if any coefficient has an imaginary part.
inline PauliSum from_dense(const Eigen::MatrixXcd& m, double threshold = 1e-14) {
  const auto dim = m.rows();
  std::size_t n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if (n == 0 || (Eigen::Index{1} << n) != dim || m.cols() != dim)
    throw InvalidArgument("from_dense needs a 2^n x 2^n matrix with n >= 1");
  PauliSum out(n);
  std::vector<Pauli> letters(n, Pauli::I);
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  for (std::uint64_t code = 0; code < count; ++code) {
    for (std::size_t q = 0; q < n; ++q) letters[q] = static_cast<Pauli>((code >> (2 * q)) & 3);
    const PauliString p(letters);
    const cplx c = (to_dense(p) * m).trace() / static_cast<double>(dim);
    if (std::abs(c.imag()) > 1e-12)
      throw NumericalError("matrix is not Hermitian: coefficient of " + p.str() + " is complex");
    if (std::abs(c.real()) > threshold) out.add(p, c.real());
  }
  return out;
}

inline double expectation(const PauliSum& h, const StateVector& psi) {
  return (psi.adjoint() * to_dense(h) * psi)(0, 0).real();
}

/// Ascending eigenvalues of a Hermitian Pauli sum.
inline Eigen::VectorXd spectrum(const PauliSum& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_dense(h), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

inline double ground_energy(const PauliSum& h) { return spectrum(h)(0); }

}  // namespace sizecon
