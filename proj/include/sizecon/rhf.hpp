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
#include <optional>
#include <string>

#include "sizecon/errors.hpp"
#include "sizecon/integrals.hpp"

namespace sizecon {

struct RhfSolution {
  Eigen::Matrix2d mo_coefficients;  // columns are MOs in AO basis, ascending energy
  Eigen::Vector2d orbital_energies;
  double e_hf = 0.0;  // includes nuclear repulsion
  int iterations = 0;
};

struct RhfOptions {
  int max_iterations = 200;
  double density_tolerance = 1e-10;
  /// AO density to start from; the core-Hamiltonian guess is used when empty.
  std::optional<Eigen::Matrix2d> initial_density;
};

namespace detail {

inline Eigen::Matrix2d two_electron_fock(const EriTensor& eri, const Eigen::Matrix2d& density) {
  Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) g(i, j) += density(k, l) * (eri(i, j, k, l) - 0.5 * eri(i, k, j, l));
  return g;
}

/// Column signs fixed so the first AO coefficient of each MO is non-negative.
inline void fix_mo_signs(Eigen::Matrix2d& c) {
  for (int k = 0; k < 2; ++k) {
    const double lead = std::abs(c(0, k)) > 1e-12 ? c(0, k) : c(1, k);
    if (lead < 0) c.col(k) = -c.col(k);
  }
}

}  // namespace detail

/// Closed-shell restricted Hartree-Fock for two electrons in two AOs.
inline RhfSolution solve_rhf(const MolecularSystem& sys, const RhfOptions& opts = {}) {
  const Eigen::Matrix2d hcore = sys.core_hamiltonian();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> s_eig(sys.overlap);
  if (s_eig.eigenvalues().minCoeff() <= 0) throw NumericalError("overlap matrix is not positive definite");
  const Eigen::Matrix2d x =
      s_eig.eigenvectors() * s_eig.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
      s_eig.eigenvectors().transpose();

  auto diagonalize = [&](const Eigen::Matrix2d& fock, Eigen::Matrix2d& c, Eigen::Vector2d& eps) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(x.transpose() * fock * x);
    c = x * eig.eigenvectors();
    eps = eig.eigenvalues();
  };
  auto density_of = [](const Eigen::Matrix2d& c) -> Eigen::Matrix2d {
    return 2.0 * c.col(0) * c.col(0).transpose();
  };

  RhfSolution sol;
  Eigen::Matrix2d density;
  if (opts.initial_density) {
    density = *opts.initial_density;
  } else {
    diagonalize(hcore, sol.mo_coefficients, sol.orbital_energies);
    density = density_of(sol.mo_coefficients);
  }

  for (int it = 1; it <= opts.max_iterations; ++it) {
    const Eigen::Matrix2d fock = hcore + detail::two_electron_fock(sys.two_electron, density);
    diagonalize(fock, sol.mo_coefficients, sol.orbital_energies);
    const Eigen::Matrix2d next = density_of(sol.mo_coefficients);
    const double change = (next - density).cwiseAbs().maxCoeff();
    density = next;
    if (change < opts.density_tolerance) {
      const Eigen::Matrix2d f = hcore + detail::two_electron_fock(sys.two_electron, density);
      diagonalize(f, sol.mo_coefficients, sol.orbital_energies);
      detail::fix_mo_signs(sol.mo_coefficients);
      sol.e_hf = 0.5 * (density.cwiseProduct(hcore + f)).sum() + sys.nuclear_repulsion;
      sol.iterations = it;
      return sol;
    }
  }
  throw NumericalError("SCF did not converge after " + std::to_string(opts.max_iterations) + " iterations");
}

}  // namespace sizecon
