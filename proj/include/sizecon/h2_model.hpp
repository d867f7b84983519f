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

#include "sizecon/circuit.hpp"
#include "sizecon/dense.hpp"
#include "sizecon/fermion.hpp"
#include "sizecon/integrals.hpp"
#include "sizecon/rhf.hpp"
#include "sizecon/state_prep.hpp"
#include "sizecon/taper.hpp"

namespace sizecon {

/// Everything derived from one H2 geometry: integrals, RHF, the 4-, 2- and
/// 1-qubit Hamiltonians, their ground states and preparation circuits.
struct H2Model {
  MolecularSystem system;
  RhfSolution rhf;
  FermionHamiltonian fermion;
  PauliSum h4{4};
  PauliSum h2q{2};
  PauliSum h1q{1};
  TwoLevelParams two_level;
  double e_hf = 0.0;
  double e_fci = 0.0;

  const PauliSum& hamiltonian(std::size_t representation) const {
    switch (representation) {
      case 1: return h1q;
      case 2: return h2q;
      case 4: return h4;
      default: throw InvalidArgument("representation must be 1, 2 or 4");
    }
  }
  PreparedState ground(std::size_t representation) const { return fci_ground(hamiltonian(representation)); }
  Circuit circuit(std::size_t representation) const { return synthesize(ground(representation)); }
};

namespace detail {
inline void finish_model(H2Model& m) {
  m.h4 = jordan_wigner(m.fermion);
  auto tapered = taper(m.h4);
  m.h2q = std::move(tapered.two_qubit);
  m.h1q = std::move(tapered.one_qubit);
  m.two_level = two_level_params(m.h1q);
  m.e_fci = ground_energy(m.h4);
}
}  // namespace detail

inline H2Model build_h2_model(double bond_length) {
  H2Model m;
  m.system = build_integrals(bond_length);
  m.rhf = solve_rhf(m.system);
  m.fermion = to_fermion(m.system, m.rhf);
  detail::finish_model(m);
  m.e_hf = m.rhf.e_hf;
  return m;
}

/// Model from externally supplied MO integrals (e.g. an FCIDUMP file). There
/// is no AO data, so `system` and `rhf` stay empty and e_hf is the
/// |1100> diagonal element.
inline H2Model h2_model_from_fermion(const FermionHamiltonian& fermion) {
  H2Model m;
  m.fermion = fermion;
  detail::finish_model(m);
  m.e_hf = m.two_level.e_reference();
  return m;
}

}  // namespace sizecon
