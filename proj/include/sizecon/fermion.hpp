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
#include <array>
#include <complex>
#include <map>
#include <utility>

#include "sizecon/errors.hpp"
#include "sizecon/integrals.hpp"
#include "sizecon/pauli.hpp"
#include "sizecon/rhf.hpp"

namespace sizecon {

/// Spatial molecular-orbital integrals plus the scalar core energy.
struct MoIntegrals {
  std::size_t n_orbitals = 0;
  double constant = 0.0;
  Eigen::MatrixXd one_body;  // h_ij
  EriTensor two_body;        // (ij|kl), chemist notation
};

/// H = constant + sum h_pq a+_p a_q + sum v_pqrs a+_p a+_q a_r a_s over spin
/// orbitals. Spatial orbital i maps to spin orbitals 2i (alpha) and 2i+1
/// (beta); for H2 this is (sigma_g up, sigma_g down, sigma_u up, sigma_u down).
struct FermionHamiltonian {
  std::size_t n_spin_orbitals = 0;
  double constant = 0.0;
  std::map<std::pair<int, int>, double> one_body;
  std::map<std::array<int, 4>, double> two_body;
};

inline constexpr double kScreeningThreshold = 1e-14;

/// AO -> MO transform of the H2 integrals.
inline MoIntegrals mo_integrals(const MolecularSystem& sys, const RhfSolution& rhf) {
  const Eigen::Matrix2d& c = rhf.mo_coefficients;
  MoIntegrals mo;
  mo.n_orbitals = 2;
  mo.constant = sys.nuclear_repulsion;
  mo.one_body = c.transpose() * sys.core_hamiltonian() * c;
  mo.two_body = EriTensor(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          double v = 0.0;
          for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q)
              for (int r = 0; r < 2; ++r)
                for (int s = 0; s < 2; ++s)
                  v += c(p, i) * c(q, j) * c(r, k) * c(s, l) * sys.two_electron(p, q, r, s);
          mo.two_body(i, j, k, l) = v;
        }
  return mo;
}

/// Spin-orbital expansion; terms at or below the screening threshold and
/// operators that vanish identically (repeated creators or annihilators) are
/// omitted.
inline FermionHamiltonian from_mo_integrals(const MoIntegrals& mo) {
  FermionHamiltonian h;
  const int n = static_cast<int>(mo.n_orbitals);
  h.n_spin_orbitals = 2 * mo.n_orbitals;
  h.constant = mo.constant;
  const int ns = 2 * n;
  for (int p = 0; p < ns; ++p)
    for (int q = 0; q < ns; ++q) {
      if (p % 2 != q % 2) continue;
      const double v = mo.one_body(p / 2, q / 2);
      if (std::abs(v) > kScreeningThreshold) h.one_body[{p, q}] = v;
    }
  for (int p = 0; p < ns; ++p)
    for (int q = 0; q < ns; ++q) {
      if (p == q) continue;
      for (int r = 0; r < ns; ++r)
        for (int s = 0; s < ns; ++s) {
          if (r == s || p % 2 != s % 2 || q % 2 != r % 2) continue;
          const double v = 0.5 * mo.two_body(p / 2, s / 2, q / 2, r / 2);
          if (std::abs(v) > kScreeningThreshold) h.two_body[{p, q, r, s}] = v;
        }
    }
  return h;
}

inline FermionHamiltonian to_fermion(const MolecularSystem& sys, const RhfSolution& rhf) {
  return from_mo_integrals(mo_integrals(sys, rhf));
}

namespace detail {

using ComplexPauliMap = std::map<PauliString, std::complex<double>>;

/// a+_p (creation) or a_p as 1/2 Z...Z (X -/+ iY).
inline ComplexPauliMap ladder(std::size_t width, int p, bool creation) {
  std::vector<Pauli> xs(width, Pauli::I);
  for (int k = 0; k < p; ++k) xs[static_cast<std::size_t>(k)] = Pauli::Z;
  std::vector<Pauli> ys = xs;
  xs[static_cast<std::size_t>(p)] = Pauli::X;
  ys[static_cast<std::size_t>(p)] = Pauli::Y;
  const std::complex<double> y_coeff = creation ? std::complex<double>(0, -0.5) : std::complex<double>(0, 0.5);
  return {{PauliString(xs), 0.5}, {PauliString(ys), y_coeff}};
}

inline ComplexPauliMap product(const ComplexPauliMap& a, const ComplexPauliMap& b) {
  ComplexPauliMap out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      auto [phase, p] = multiply(pa, pb);
      out[p] += phase.value() * ca * cb;
    }
  return out;
}

inline void accumulate(ComplexPauliMap& into, const ComplexPauliMap& term, double scale) {
  for (const auto& [p, c] : term) into[p] += scale * c;
}

}  // namespace detail

/// Jordan-Wigner mapping, one qubit per spin orbital.
inline PauliSum jordan_wigner(const FermionHamiltonian& h) {
  const std::size_t n = h.n_spin_orbitals;
  if (n == 0) throw InvalidArgument("Hamiltonian has no spin orbitals");
  std::vector<detail::ComplexPauliMap> create(n), annihilate(n);
  for (std::size_t p = 0; p < n; ++p) {
    create[p] = detail::ladder(n, static_cast<int>(p), true);
    annihilate[p] = detail::ladder(n, static_cast<int>(p), false);
  }
  detail::ComplexPauliMap acc;
  acc[PauliString::identity(n)] += h.constant;
  for (const auto& [pq, v] : h.one_body)
    detail::accumulate(acc, detail::product(create[pq.first], annihilate[pq.second]), v);
  for (const auto& [idx, v] : h.two_body) {
    const auto left = detail::product(create[idx[0]], create[idx[1]]);
    const auto right = detail::product(annihilate[idx[2]], annihilate[idx[3]]);
    detail::accumulate(acc, detail::product(left, right), v);
  }
  PauliSum out(n);
  for (const auto& [p, c] : acc) {
    if (std::abs(c.imag()) > 1e-12)
      throw NumericalError("non-Hermitian Jordan-Wigner image: " + p.str() + " has imaginary coefficient");
    out.add(p, c.real());
  }
  out.simplify(kScreeningThreshold);
  return out;
}

}  // namespace sizecon
