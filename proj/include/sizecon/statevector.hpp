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

#include <bit>
#include <cmath>
#include <cstdint>

#include "sizecon/circuit.hpp"
#include "sizecon/dense.hpp"
#include "sizecon/errors.hpp"

namespace sizecon {

inline std::size_t state_width(const StateVector& psi) {
  const auto dim = static_cast<std::uint64_t>(psi.size());
  if (dim == 0 || !std::has_single_bit(dim)) throw InvalidArgument("state dimension must be a power of two");
  return static_cast<std::size_t>(std::countr_zero(dim));
}

inline StateVector basis_state(std::size_t width, std::uint64_t index = 0) {
  StateVector psi = StateVector::Zero(Eigen::Index{1} << width);
  psi(static_cast<Eigen::Index>(index)) = 1.0;
  return psi;
}

/// In-place gate application. Only amplitudes whose indices differ on the
/// gate's qubits are touched.
inline void apply_gate(StateVector& psi, const Gate& g) {
  const std::size_t n = state_width(psi);
  for (std::size_t k = 0; k < g.arity(); ++k)
    if (g.targets[k] >= n)
      throw InvalidArgument(std::string(gate_name(g.kind)) + " target " + std::to_string(g.targets[k]) +
                            " out of range for " + std::to_string(n) + "-qubit state");
  const auto dim = static_cast<std::uint64_t>(psi.size());
  const std::uint64_t m0 = qubit_mask(n, g.targets[0]);
  cplx* a = psi.data();
  switch (g.kind) {
    case GateKind::X:
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & m0)) std::swap(a[i], a[i | m0]);
      break;
    case GateKind::RY: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & m0)) {
          const cplx u = a[i], v = a[i | m0];
          a[i] = c * u - s * v;
          a[i | m0] = s * u + c * v;
        }
      break;
    }
    case GateKind::RZ: {
      const cplx lo = std::polar(1.0, -g.angle / 2), hi = std::polar(1.0, g.angle / 2);
      for (std::uint64_t i = 0; i < dim; ++i) a[i] *= (i & m0) ? hi : lo;
      break;
    }
    case GateKind::CZ: {
      const std::uint64_t both = m0 | qubit_mask(n, g.targets[1]);
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & both) == both) a[i] = -a[i];
      break;
    }
    case GateKind::CNOT: {
      const std::uint64_t mt = qubit_mask(n, g.targets[1]);
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & m0) && !(i & mt)) std::swap(a[i], a[i | mt]);
      break;
    }
  }
}

inline void apply_pauli(StateVector& psi, std::size_t q, Pauli p) {
  const std::size_t n = state_width(psi);
  if (q >= n) throw InvalidArgument("Pauli target out of range");
  const std::uint64_t m = qubit_mask(n, q);
  const auto dim = static_cast<std::uint64_t>(psi.size());
  cplx* a = psi.data();
  switch (p) {
    case Pauli::I: break;
    case Pauli::X:
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & m)) std::swap(a[i], a[i | m]);
      break;
    case Pauli::Z:
      for (std::uint64_t i = 0; i < dim; ++i)
        if (i & m) a[i] = -a[i];
      break;
    case Pauli::Y:
      // Y|0> = i|1>, Y|1> = -i|0>
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & m)) {
          const cplx u = a[i], v = a[i | m];
          a[i] = cplx(0, -1) * v;
          a[i | m] = cplx(0, 1) * u;
        }
      break;
  }
}

inline void apply_circuit(StateVector& psi, const Circuit& c) {
  for (const auto& g : c.gates()) apply_gate(psi, g);
}

/// Final state of `c` applied to |0...0>.
inline StateVector simulate(const Circuit& c) {
  StateVector psi = basis_state(c.width());
  apply_circuit(psi, c);
  return psi;
}

inline double fidelity(const StateVector& a, const StateVector& b) { return std::norm(a.dot(b)); }

}  // namespace sizecon
