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
#include <cmath>
#include <cstdint>
#include <optional>

#include "sizecon/circuit.hpp"
#include "sizecon/dense.hpp"
#include "sizecon/errors.hpp"
#include "sizecon/statevector.hpp"
#include "sizecon/taper.hpp"

namespace sizecon {

struct PreparedState {
  std::size_t representation = 0;  // qubits per H2: 1, 2 or 4
  std::uint64_t reference_index = 0;
  StateVector amplitudes;
  double energy = 0.0;
};

/// Register index of the Hartree-Fock determinant for a representation width.
inline std::uint64_t reference_index(std::size_t width) { return width == 4 ? kHartreeFock4 : 0; }

/// Lowest eigenvector of `h`, phased so the reference amplitude is real and
/// non-negative.
inline PreparedState fci_ground(const PauliSum& h, std::optional<std::uint64_t> reference = std::nullopt) {
  if (h.width() > 8) throw InvalidArgument("fci_ground supports at most 8 qubits");
  const Eigen::MatrixXcd m = to_dense(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m);
  if (eig.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  const Eigen::VectorXd& vals = eig.eigenvalues();
  if (vals.size() > 1 && vals(1) - vals(0) < 1e-12)
    throw NumericalError("ground level is degenerate within 1e-12 (gap " + std::to_string(vals(1) - vals(0)) + ")");

  PreparedState out;
  out.representation = h.width();
  out.reference_index = reference.value_or(reference_index(h.width()));
  if (out.reference_index >= static_cast<std::uint64_t>(m.rows()))
    throw InvalidArgument("reference index outside the register");
  StateVector psi = eig.eigenvectors().col(0);
  Eigen::Index pivot = static_cast<Eigen::Index>(out.reference_index);
  if (std::abs(psi(pivot)) < 1e-14) psi.cwiseAbs().maxCoeff(&pivot);
  psi *= std::conj(psi(pivot)) / std::abs(psi(pivot));
  psi(pivot) = std::abs(psi(pivot));
  out.amplitudes = psi.normalized();
  out.energy = (out.amplitudes.adjoint() * m * out.amplitudes)(0, 0).real();
  return out;
}

namespace detail {

inline constexpr double kNegligibleAngle = 1e-15;

inline void require_real(const StateVector& psi) {
  if (psi.imag().cwiseAbs().maxCoeff() > 1e-10)
    throw NumericalError("synthesis supports real amplitudes only");
}

inline void add_ry(Circuit& c, std::size_t q, double theta) {
  if (std::abs(theta) > kNegligibleAngle) c.add(Gate::ry(q, theta));
}

inline Circuit synthesize_two_qubit(const StateVector& psi) {
  Eigen::Matrix2d m;
  m << psi(0).real(), psi(1).real(), psi(2).real(), psi(3).real();
  Circuit c(2);
  if (std::abs(m(0, 1)) < 1e-14 && std::abs(m(1, 0)) < 1e-14) {
    add_ry(c, 0, 2.0 * std::atan2(m(1, 1), m(0, 0)));
    if (std::abs(m(1, 1)) > 1e-15) c.add(Gate::cnot(0, 1));
    return c;
  }
  // Schmidt form: psi = sum_k s_k u_k (x) v_k, realized as
  // RY(q0) -> CNOT(0,1) -> (U on q0) (x) (V on q1) with U, V proper rotations.
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2d u = svd.matrixU(), v = svd.matrixV();
  double s0 = svd.singularValues()(0), s1 = svd.singularValues()(1);
  if (u.determinant() < 0) u.col(1) = -u.col(1), s1 = -s1;
  if (v.determinant() < 0) v.col(1) = -v.col(1), s1 = -s1;
  add_ry(c, 0, 2.0 * std::atan2(s1, s0));
  if (std::abs(s1) > 1e-15) c.add(Gate::cnot(0, 1));
  add_ry(c, 0, 2.0 * std::atan2(u(1, 0), u(0, 0)));
  add_ry(c, 1, 2.0 * std::atan2(v(1, 0), v(0, 0)));
  return c;
}

inline Circuit synthesize_four_qubit(const StateVector& psi) {
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    if (i != static_cast<Eigen::Index>(kHartreeFock4) && i != static_cast<Eigen::Index>(kDouble4) &&
        std::abs(psi(i)) > 1e-10)
      throw NumericalError("4-qubit synthesis expects a state in span{|1100>, |0011>}");
  const double theta = 2.0 * std::atan2(psi(kDouble4).real(), psi(kHartreeFock4).real());
  Circuit c(4);
  c.add(Gate::x(0)).add(Gate::x(1));
  if (std::abs(theta) > kNegligibleAngle) {
    // |1100> -> c|1100> + s|1110> -> c|1100> + s|1111> -> ... -> c|1100> + s|0011>
    c.add(Gate::ry(2, theta));
    c.add(Gate::cnot(2, 3)).add(Gate::cnot(2, 0)).add(Gate::cnot(2, 1));
  }
  return c;
}

}  // namespace detail

/// Shallow circuit taking |0...0> to `target`:
///   1 qubit:  one RY;
///   2 qubits: at most one CNOT plus RY rotations;
///   4 qubits: X layer for the HF reference, one RY and three CNOTs.
inline Circuit synthesize(const PreparedState& target) {
  const StateVector& psi = target.amplitudes;
  const std::size_t width = state_width(psi);
  detail::require_real(psi);
  Circuit c;
  switch (width) {
    case 1:
      c = Circuit(1);
      c.add(Gate::ry(0, 2.0 * std::atan2(psi(1).real(), psi(0).real())));
      break;
    case 2: c = detail::synthesize_two_qubit(psi); break;
    case 4: c = detail::synthesize_four_qubit(psi); break;
    default: throw InvalidArgument("no synthesis route for width " + std::to_string(width));
  }
  const double f = fidelity(simulate(c), psi);
  if (f < 1.0 - 1e-12) throw NumericalError("synthesized circuit fidelity " + std::to_string(f) + " below contract");
  return c;
}

}  // namespace sizecon
