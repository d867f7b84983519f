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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles/ci_oracle.hpp"
#include "sizecon/dense.hpp"
#include "sizecon/h2_model.hpp"

using namespace sizecon;

namespace {

const double kBondLengths[] = {0.5, 0.7414, 1.5, 3.0};

// Composite Simpson on exp(-x t^2) over [0, 1].
double boys_quadrature(double x) {
  const int n = 20000;
  const double h = 1.0 / n;
  double s = 1.0 + std::exp(-x);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * std::exp(-x * (k * h) * (k * h));
  return s * h / 3.0;
}

}  // namespace

TEST(integrals, boys_function_matches_quadrature) {
  for (double x : {0.0, 1e-13, 1e-6, 0.3, 1.0, 5.0, 30.0}) EXPECT_NEAR(boys_f0(x), boys_quadrature(x), 1e-12) << x;
}

// Szabo & Ostlund, Modern Quantum Chemistry, section 3.5.2 (R = 1.4 bohr).
TEST(integrals, textbook_values_at_1p4_bohr) {
  const auto sys = detail::build_integrals_at(0.0, 1.4);
  EXPECT_NEAR(sys.overlap(0, 0), 1.0, 1e-12);
  EXPECT_NEAR(sys.overlap(0, 1), 0.6593, 1e-4);
  EXPECT_NEAR(sys.kinetic(0, 0), 0.7600, 1e-4);
  EXPECT_NEAR(sys.kinetic(0, 1), 0.2365, 1e-4);
  EXPECT_NEAR(sys.nuclear_attraction(0, 0), -1.2266 - 0.6538, 2e-4);
  EXPECT_NEAR(sys.nuclear_attraction(0, 1), 2 * -0.5974, 2e-4);
  const auto h = sys.core_hamiltonian();
  EXPECT_NEAR(h(0, 0), -1.1204, 1e-4);
  EXPECT_NEAR(h(0, 1), -0.9584, 1e-4);
  EXPECT_NEAR(sys.two_electron(0, 0, 0, 0), 0.7746, 1e-4);
  EXPECT_NEAR(sys.two_electron(0, 0, 1, 1), 0.5697, 1e-4);
  EXPECT_NEAR(sys.two_electron(1, 0, 0, 0), 0.4441, 1e-4);
  EXPECT_NEAR(sys.two_electron(1, 0, 1, 0), 0.2970, 1e-4);
  EXPECT_NEAR(sys.nuclear_repulsion, 1.0 / 1.4, 1e-15);
  EXPECT_NEAR(solve_rhf(sys).e_hf, -1.1167, 1e-4);
}

TEST(integrals, eri_has_eightfold_symmetry) {
  const auto sys = build_integrals(0.9);
  const auto& g = sys.two_electron;
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s) {
          const double v = g(p, q, r, s);
          EXPECT_DOUBLE_EQ(v, g(q, p, r, s));
          EXPECT_DOUBLE_EQ(v, g(p, q, s, r));
          EXPECT_DOUBLE_EQ(v, g(r, s, p, q));
        }
}

TEST(integrals, rejects_bad_bond_length) {
  EXPECT_THROW(build_integrals(0.0), InvalidArgument);
  EXPECT_THROW(build_integrals(-1.0), InvalidArgument);
  EXPECT_THROW(build_integrals(std::nan("")), InvalidArgument);
  EXPECT_DOUBLE_EQ(build_integrals(0.7414).bond_length, 0.7414);
}

TEST(rhf, orthonormal_orbitals_and_ordering) {
  for (double r : kBondLengths) {
    const auto sys = build_integrals(r);
    const auto rhf = solve_rhf(sys);
    const Eigen::Matrix2d ctsc = rhf.mo_coefficients.transpose() * sys.overlap * rhf.mo_coefficients;
    EXPECT_LT((ctsc - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(rhf.orbital_energies(0), rhf.orbital_energies(1));
    // Bonding orbital: equal-sign AO coefficients.
    EXPECT_GT(rhf.mo_coefficients(0, 0) * rhf.mo_coefficients(1, 0), 0.0);
  }
}

TEST(rhf, independent_of_initial_density) {
  const auto sys = build_integrals(1.1);
  RhfOptions opts;
  opts.initial_density = Eigen::Matrix2d::Identity();
  EXPECT_NEAR(solve_rhf(sys, opts).e_hf, solve_rhf(sys).e_hf, 1e-12);
}

TEST(rhf, reports_non_convergence) {
  RhfOptions opts;
  opts.max_iterations = 1;
  opts.density_tolerance = 0.0;
  EXPECT_THROW(solve_rhf(build_integrals(0.7414), opts), NumericalError);
}

TEST(jordan_wigner, h2_has_fifteen_real_terms) {
  const auto m = build_h2_model(0.7414);
  EXPECT_EQ(m.h4.size(), 15u);
  EXPECT_EQ(m.h4.non_identity_strings().size(), 14u);
  const Eigen::MatrixXcd dense = to_dense(m.h4);
  EXPECT_LT((dense - dense.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(jordan_wigner, conserves_particle_number_and_spin) {
  const auto m = build_h2_model(1.5);
  PauliSum number(4), sz(4);
  for (std::size_t q = 0; q < 4; ++q) {
    std::string z(4, 'I');
    z[q] = 'Z';
    number.add(PauliString::parse("IIII"), 0.5);
    number.add(PauliString::parse(z), -0.5);
    sz.add(PauliString::parse(z), q % 2 ? 0.25 : -0.25);
  }
  const Eigen::MatrixXcd h = to_dense(m.h4);
  for (const auto* op : {&number, &sz}) {
    const Eigen::MatrixXcd o = to_dense(*op);
    EXPECT_LT((h * o - o * h).cwiseAbs().maxCoeff(), 1e-12);
  }
  // |1100> holds the two sigma_g electrons.
  const Eigen::MatrixXcd n = to_dense(number);
  EXPECT_NEAR(n(12, 12).real(), 2.0, 1e-15);
}

TEST(jordan_wigner, hartree_fock_diagonal_matches_rhf) {
  for (double r : kBondLengths) {
    const auto m = build_h2_model(r);
    EXPECT_NEAR(to_dense(m.h4)(kHartreeFock4, kHartreeFock4).real(), m.e_hf, 1e-10) << r;
  }
}

TEST(jordan_wigner, single_one_body_term) {
  FermionHamiltonian f;
  f.n_spin_orbitals = 2;
  f.one_body[{0, 1}] = 0.5;
  f.one_body[{1, 0}] = 0.5;
  const PauliSum h = jordan_wigner(f);
  // a0+ a1 + a1+ a0 = (XX + YY) / 2
  EXPECT_NEAR(h.coefficient(PauliString::parse("XX")), 0.25, 1e-15);
  EXPECT_NEAR(h.coefficient(PauliString::parse("YY")), 0.25, 1e-15);
  EXPECT_EQ(h.size(), 2u);
  EXPECT_THROW(jordan_wigner(FermionHamiltonian{}), InvalidArgument);
}

// Four independent energy routes agree at every geometry.
TEST(oracle_equivalence, all_representations_match_ci) {
  for (double r : kBondLengths) {
    const auto m = build_h2_model(r);
    const auto ci = oracle::brute_force_ci(m.system, m.rhf.mo_coefficients);
    EXPECT_NEAR(ground_energy(m.h4), ci.e_fci, 1e-10) << r;
    EXPECT_NEAR(ground_energy(m.h2q), ci.e_fci, 1e-10) << r;
    EXPECT_NEAR(ground_energy(m.h1q), ci.e_fci, 1e-10) << r;
    EXPECT_NEAR(m.e_hf, ci.e_hf_diagonal, 1e-10) << r;
    EXPECT_NEAR(m.two_level.e_reference(), ci.e_hf_diagonal, 1e-10) << r;
    EXPECT_NEAR(m.two_level.e_double(), ci.matrix(3, 3), 1e-10) << r;
    EXPECT_NEAR(std::abs(m.two_level.coupling()), std::abs(ci.hf_double_coupling), 1e-10) << r;
  }
}

TEST(oracle_equivalence, reference_energies_at_equilibrium) {
  const auto m = build_h2_model(0.7414);
  EXPECT_NEAR(m.e_hf, -1.11671, 1e-4);
  EXPECT_NEAR(m.e_fci, -1.13728, 1e-4);
  EXPECT_LT(m.e_fci, m.e_hf);
}

TEST(taper, sector_spectrum_is_subset) {
  const auto m = build_h2_model(0.7414);
  const auto full = spectrum(m.h4);
  for (const auto* h : {&m.h2q, &m.h1q}) {
    const auto part = spectrum(*h);
    for (Eigen::Index k = 0; k < part.size(); ++k)
      EXPECT_LT((full.array() - part(k)).abs().minCoeff(), 1e-10);
  }
  EXPECT_NEAR(m.h1q.coefficient(PauliString::parse("Y")), 0.0, 1e-14);
}

TEST(taper, rejects_symmetry_breaking_input) {
  PauliSum broken(4);
  broken.add(PauliString::parse("XIII"), 1.0);
  EXPECT_THROW(taper(broken), NumericalError);
  EXPECT_THROW(taper(PauliSum(2)), InvalidArgument);
  PauliSum y(1);
  y.add(PauliString::parse("Y"), 0.1);
  EXPECT_THROW(two_level_params(y), InvalidArgument);
}

TEST(integrals, invariant_under_atom_swap) {
  const auto a = detail::build_integrals_at(0.0, 1.3);
  const auto b = detail::build_integrals_at(1.3, 0.0);
  auto sw = [](std::size_t i) { return 1 - i; };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_NEAR(a.overlap(i, j), b.overlap(sw(i), sw(j)), 1e-12);
      EXPECT_NEAR(a.kinetic(i, j), b.kinetic(sw(i), sw(j)), 1e-12);
      EXPECT_NEAR(a.nuclear_attraction(i, j), b.nuclear_attraction(sw(i), sw(j)), 1e-12);
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          EXPECT_NEAR(a.two_electron(i, j, k, l), b.two_electron(sw(i), sw(j), sw(k), sw(l)), 1e-12);
    }
}

TEST(oracle_equivalence, variational_chain) {
  for (double r : kBondLengths) {
    const auto m = build_h2_model(r);
    EXPECT_GE(m.e_hf, m.e_fci);
    EXPECT_NEAR(ground_energy(m.h2q), m.e_fci, 1e-10);
  }
}
