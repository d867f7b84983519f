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

#include <array>
#include <cstdint>

#include "sizecon/dense.hpp"
#include "sizecon/errors.hpp"
#include "sizecon/pauli.hpp"

namespace sizecon {

/// Two-electron, S_z = 0 determinants of H2 in the 4-qubit Jordan-Wigner
/// register, listed in the order that defines the 2-qubit code words:
///   00 <- |1100> (HF), 01 <- |1001>, 10 <- |0110>, 11 <- |0011> (double).
/// Equivalently the 2-qubit register holds the occupations of sigma_u up and
/// sigma_u down; the sigma_g occupations are their complements.
inline constexpr std::array<std::uint64_t, 4> kSectorBasis = {0b1100, 0b1001, 0b0110, 0b0011};
inline constexpr std::uint64_t kHartreeFock4 = 0b1100;
inline constexpr std::uint64_t kDouble4 = 0b0011;

struct TaperedHamiltonians {
  PauliSum two_qubit{2};
  PauliSum one_qubit{1};
};

/// h1q = g0 I + g1 Z + g2 X in the {|HF>, |double>} basis.
struct TwoLevelParams {
  double g0 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;

  double e_reference() const { return g0 + g1; }
  double e_double() const { return g0 - g1; }
  double coupling() const { return g2; }
};

inline TwoLevelParams two_level_params(const PauliSum& h1q) {
  if (h1q.width() != 1) throw InvalidArgument("two-level parameters need a 1-qubit Hamiltonian");
  if (std::abs(h1q.coefficient(PauliString::parse("Y"))) > 1e-12)
    throw InvalidArgument("1-qubit Hamiltonian has a Y component");
  return {h1q.coefficient(PauliString::parse("I")), h1q.coefficient(PauliString::parse("Z")),
          h1q.coefficient(PauliString::parse("X"))};
}

namespace detail {

/// Largest |M(r, c)| with c inside `cols` and r outside `rows`.
template <std::size_t NR, std::size_t NC>
double leakage(const Eigen::MatrixXcd& m, const std::array<Eigen::Index, NR>& rows,
               const std::array<Eigen::Index, NC>& cols) {
  double worst = 0.0;
  for (Eigen::Index c : cols)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (std::find(rows.begin(), rows.end(), r) == rows.end()) worst = std::max(worst, std::abs(m(r, c)));
  return worst;
}

}  // namespace detail

/// Projects the 4-qubit H2 Hamiltonian onto the (N = 2, S_z = 0) sector
/// (2 qubits) and then onto its {HF, double} gerade block (1 qubit).
inline TaperedHamiltonians taper(const PauliSum& h4) {
  if (h4.width() != 4)
    throw InvalidArgument("taper expects the 4-qubit H2 Hamiltonian, got width " + std::to_string(h4.width()));
  const Eigen::MatrixXcd m = to_dense(h4);
  constexpr double kClosure = 1e-10;

  std::array<Eigen::Index, 4> sector{};
  for (std::size_t k = 0; k < 4; ++k) sector[k] = static_cast<Eigen::Index>(kSectorBasis[k]);
  if (detail::leakage(m, sector, sector) > kClosure)
    throw NumericalError("(N=2, Sz=0) sector is not closed under the Hamiltonian");
  Eigen::MatrixXcd block(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) block(r, c) = m(sector[r], sector[c]);

  const std::array<Eigen::Index, 2> gerade = {0, 3};
  if (detail::leakage(block, gerade, gerade) > kClosure)
    throw NumericalError("{HF, double} block is not closed under the Hamiltonian");
  Eigen::MatrixXcd two(2, 2);
  two << block(0, 0), block(0, 3), block(3, 0), block(3, 3);

  return {from_dense(block), from_dense(two)};
}

}  // namespace sizecon
