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
#include <cmath>
#include <numbers>
#include <vector>

#include "sizecon/errors.hpp"
#include "sizecon/units.hpp"

namespace sizecon {

/// Dense 4-index tensor (pq|rs) in chemist notation.
class EriTensor {
 public:
  EriTensor() = default;
  explicit EriTensor(std::size_t n) : n_(n), data_(n * n * n * n, 0.0) {}

  std::size_t dim() const { return n_; }
  double& operator()(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return data_[((p * n_ + q) * n_ + r) * n_ + s];
  }
  double operator()(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return data_[((p * n_ + q) * n_ + r) * n_ + s];
  }

  /// Writes v into all eight symmetry-equivalent slots of (pq|rs).
  void set_symmetric(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double v) {
    (*this)(p, q, r, s) = v;
    (*this)(q, p, r, s) = v;
    (*this)(p, q, s, r) = v;
    (*this)(q, p, s, r) = v;
    (*this)(r, s, p, q) = v;
    (*this)(s, r, p, q) = v;
    (*this)(r, s, q, p) = v;
    (*this)(s, r, q, p) = v;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// H2 in the minimal STO-3G basis: one contracted 1s function per atom, in
/// atomic units unless noted.
struct MolecularSystem {
  double bond_length = 0.0;  // angstrom
  double nuclear_repulsion = 0.0;
  Eigen::Matrix2d overlap;
  Eigen::Matrix2d kinetic;
  Eigen::Matrix2d nuclear_attraction;  // summed over both nuclei
  EriTensor two_electron{2};

  Eigen::Matrix2d core_hamiltonian() const { return kinetic + nuclear_attraction; }
};

namespace sto3g {
// Hydrogen 1s contraction (zeta = 1.24).
inline constexpr std::array<double, 3> kExponents = {3.42525091, 0.62391373, 0.16885540};
inline constexpr std::array<double, 3> kCoefficients = {0.15432897, 0.53532814, 0.44463454};
}  // namespace sto3g

/// Boys function of order zero.
inline double boys_f0(double x) {
  if (x < 1e-12) return 1.0 - x / 3.0;
  const double r = std::sqrt(x);
  return 0.5 * std::sqrt(std::numbers::pi / x) * std::erf(r);
}

namespace detail {

struct Primitive {
  double exponent;
  double weight;  // contraction coefficient times primitive normalization
  double center;  // z coordinate, bohr
};

using Contracted = std::array<Primitive, 3>;

inline double overlap_prim(const Primitive& a, const Primitive& b) {
  const double p = a.exponent + b.exponent;
  const double ab2 = (a.center - b.center) * (a.center - b.center);
  return std::pow(std::numbers::pi / p, 1.5) * std::exp(-a.exponent * b.exponent / p * ab2);
}

inline double kinetic_prim(const Primitive& a, const Primitive& b) {
  const double p = a.exponent + b.exponent;
  const double mu = a.exponent * b.exponent / p;
  const double ab2 = (a.center - b.center) * (a.center - b.center);
  return mu * (3.0 - 2.0 * mu * ab2) * std::pow(std::numbers::pi / p, 1.5) * std::exp(-mu * ab2);
}

inline double attraction_prim(const Primitive& a, const Primitive& b, double nucleus, double charge) {
  const double p = a.exponent + b.exponent;
  const double mu = a.exponent * b.exponent / p;
  const double ab2 = (a.center - b.center) * (a.center - b.center);
  const double pc = (a.exponent * a.center + b.exponent * b.center) / p - nucleus;
  return -2.0 * std::numbers::pi / p * charge * std::exp(-mu * ab2) * boys_f0(p * pc * pc);
}

inline double eri_prim(const Primitive& a, const Primitive& b, const Primitive& c, const Primitive& d) {
  const double p = a.exponent + b.exponent;
  const double q = c.exponent + d.exponent;
  const double ab2 = (a.center - b.center) * (a.center - b.center);
  const double cd2 = (c.center - d.center) * (c.center - d.center);
  const double pz = (a.exponent * a.center + b.exponent * b.center) / p;
  const double qz = (c.exponent * c.center + d.exponent * d.center) / q;
  const double pi = std::numbers::pi;
  return 2.0 * std::pow(pi, 2.5) / (p * q * std::sqrt(p + q)) *
         std::exp(-a.exponent * b.exponent / p * ab2 - c.exponent * d.exponent / q * cd2) *
         boys_f0(p * q / (p + q) * (pz - qz) * (pz - qz));
}

inline Contracted hydrogen_1s(double center) {
  Contracted f{};
  for (std::size_t k = 0; k < 3; ++k) {
    const double a = sto3g::kExponents[k];
    f[k] = {a, sto3g::kCoefficients[k] * std::pow(2.0 * a / std::numbers::pi, 0.75), center};
  }
  double self = 0.0;
  for (const auto& x : f)
    for (const auto& y : f) self += x.weight * y.weight * overlap_prim(x, y);
  for (auto& x : f) x.weight /= std::sqrt(self);
  return f;
}

template <class F>
double contract2(const Contracted& a, const Contracted& b, F&& f) {
  double s = 0.0;
  for (const auto& x : a)
    for (const auto& y : b) s += x.weight * y.weight * f(x, y);
  return s;
}

/// Integrals for two hydrogen nuclei at z positions (bohr); AO k sits on
/// nucleus k.
inline MolecularSystem build_integrals_at(double z0, double z1) {
  const std::array<Contracted, 2> ao = {hydrogen_1s(z0), hydrogen_1s(z1)};
  const std::array<double, 2> nuclei = {z0, z1};
  MolecularSystem sys;
  const double r = std::abs(z1 - z0);
  sys.bond_length = r * units::kBohrAngstrom;
  sys.nuclear_repulsion = 1.0 / r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      sys.overlap(i, j) = contract2(ao[i], ao[j], overlap_prim);
      sys.kinetic(i, j) = contract2(ao[i], ao[j], kinetic_prim);
      sys.nuclear_attraction(i, j) = 0.0;
      for (double c : nuclei)
        sys.nuclear_attraction(i, j) += contract2(
            ao[i], ao[j], [&](const Primitive& x, const Primitive& y) { return attraction_prim(x, y, c, 1.0); });
    }
  }
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t rr = 0; rr < 2; ++rr)
        for (std::size_t s = 0; s <= rr; ++s) {
          if (p * 2 + q < rr * 2 + s) continue;
          double v = 0.0;
          for (const auto& a : ao[p])
            for (const auto& b : ao[q])
              for (const auto& c : ao[rr])
                for (const auto& d : ao[s]) v += a.weight * b.weight * c.weight * d.weight * eri_prim(a, b, c, d);
          sys.two_electron.set_symmetric(p, q, rr, s, v);
        }
  // Enforce exact symmetry of the one-electron matrices.
  sys.overlap = 0.5 * (sys.overlap + sys.overlap.transpose()).eval();
  sys.kinetic = 0.5 * (sys.kinetic + sys.kinetic.transpose()).eval();
  sys.nuclear_attraction = 0.5 * (sys.nuclear_attraction + sys.nuclear_attraction.transpose()).eval();
  return sys;
}

}  // namespace detail

/// STO-3G integrals for H2 at the given bond length (angstrom).
inline MolecularSystem build_integrals(double bond_length) {
  if (!(bond_length > 0.0) || !std::isfinite(bond_length))
    throw InvalidArgument("bond length must be positive and finite");
  MolecularSystem sys = detail::build_integrals_at(0.0, bond_length * units::kAngstromToBohr);
  sys.bond_length = bond_length;
  return sys;
}

}  // namespace sizecon
