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
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "sizecon/errors.hpp"
#include "sizecon/taper.hpp"
#include "sizecon/units.hpp"

namespace sizecon {

struct WlsPoint {
  double x = 0.0;
  double y = 0.0;
  double stddev = 0.0;
};

struct RegressionPoint {
  double x = 0.0;
  double y = 0.0;
  double weight = 0.0;
};

struct RegressionResult {
  double slope_delta = 0.0;  // kcal/mol per qubit when fed kcal/mol vs qubits
  double intercept = 0.0;
  double slope_stderr = 0.0;
  std::vector<RegressionPoint> points;
};

/// Weighted least squares with w_i = 1 / stddev_i^2 via the weighted normal
/// equations. The slope standard error uses the weighted residual variance
/// with n - 2 degrees of freedom; with exactly two points (no residual
/// degrees of freedom) it falls back to the known-variance form 1 / S_xx.
inline RegressionResult wls_fit(std::span<const WlsPoint> pts) {
  if (pts.size() < 2) throw InvalidArgument("WLS needs at least two points");
  std::set<double> xs;
  RegressionResult r;
  double sw = 0, swx = 0, swy = 0;
  for (const auto& p : pts) {
    if (!(p.stddev > 0.0) || !std::isfinite(p.stddev))
      throw InvalidArgument("WLS point at x = " + std::to_string(p.x) + " has non-positive stddev");
    const double w = 1.0 / (p.stddev * p.stddev);
    r.points.push_back({p.x, p.y, w});
    xs.insert(p.x);
    sw += w;
    swx += w * p.x;
    swy += w * p.y;
  }
  if (xs.size() < 2) throw InvalidArgument("WLS needs at least two distinct x values");
  const double xbar = swx / sw, ybar = swy / sw;
  double sxx = 0, sxy = 0;
  for (const auto& p : r.points) {
    sxx += p.weight * (p.x - xbar) * (p.x - xbar);
    sxy += p.weight * (p.x - xbar) * (p.y - ybar);
  }
  r.slope_delta = sxy / sxx;
  r.intercept = ybar - r.slope_delta * xbar;
  if (pts.size() > 2) {
    double rss = 0;
    for (const auto& p : r.points) {
      const double res = p.y - r.intercept - r.slope_delta * p.x;
      rss += p.weight * res * res;
    }
    r.slope_stderr = std::sqrt(rss / static_cast<double>(pts.size() - 2) / sxx);
  } else {
    r.slope_stderr = std::sqrt(1.0 / sxx);
  }
  return r;
}

/// Largest system still within chemical accuracy for a per-qubit drift.
struct Horizon {
  std::int64_t n_qubit = 0;
  std::int64_t n_h2 = 0;
  bool unbounded = false;  // delta == 0
};

inline Horizon horizon(double delta, std::size_t qubits_per_h2) {
  if (!std::isfinite(delta)) throw InvalidArgument("delta must be finite");
  if (qubits_per_h2 == 0) throw InvalidArgument("qubits per H2 must be positive");
  if (delta == 0.0)
    return {std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::max(), true};
  // The small slack keeps exact quotients (e.g. 1 / 0.01) from flooring down.
  const double q = units::kChemicalAccuracy / std::abs(delta);
  const auto n_qubit = static_cast<std::int64_t>(std::floor(q * (1.0 + 1e-12)));
  return {n_qubit, n_qubit / static_cast<std::int64_t>(qubits_per_h2), false};
}

struct CisdPoint {
  std::size_t n = 0;
  double energy = 0.0;                    // hartree, whole system
  double correlation_per_h2 = 0.0;        // hartree
  double double_population_per_h2 = 0.0;
};

/// CISD for N non-interacting H2 in the {HF, one double per molecule} space:
/// diagonal N*e_hf and (N-1)*e_hf + e_double, HF <-> double_i coupling g2,
/// no double_i <-> double_j coupling.
inline CisdPoint cisd_point(const TwoLevelParams& h, std::size_t n) {
  if (n == 0) throw InvalidArgument("CISD needs N >= 1");
  const auto dim = static_cast<Eigen::Index>(n + 1);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  const double nn = static_cast<double>(n);
  m(0, 0) = nn * h.e_reference();
  for (Eigen::Index i = 1; i < dim; ++i) {
    m(i, i) = (nn - 1.0) * h.e_reference() + h.e_double();
    m(0, i) = m(i, 0) = h.coupling();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  const Eigen::VectorXd c = eig.eigenvectors().col(0);
  CisdPoint p;
  p.n = n;
  p.energy = eig.eigenvalues()(0);
  p.correlation_per_h2 = (p.energy - nn * h.e_reference()) / nn;
  p.double_population_per_h2 = c.tail(dim - 1).squaredNorm() / nn;
  return p;
}

inline std::vector<CisdPoint> cisd_reference(const TwoLevelParams& h, std::size_t n_max) {
  std::vector<CisdPoint> out;
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(cisd_point(h, n));
  return out;
}

/// Exact single-molecule ground state of the two-level Hamiltonian.
struct FciTwoLevel {
  double energy = 0.0;
  double double_population = 0.0;
};

inline FciTwoLevel fci_two_level(const TwoLevelParams& h) {
  Eigen::Matrix2d m;
  m << h.e_reference(), h.coupling(), h.coupling(), h.e_double();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(m);
  return {eig.eigenvalues()(0), eig.eigenvectors()(1, 0) * eig.eigenvectors()(1, 0)};
}

struct ErrorStatPoint {
  std::size_t n = 0;
  std::size_t samples = 0;
  double mean_error_kcal = 0.0;
  double stddev_kcal = 0.0;  // sample standard deviation (n - 1); 0 for one sample
};

struct ErrorStats {
  std::vector<ErrorStatPoint> points;
  double hartree_fock_kcal = 0.0;  // e_hf - e_fci
};

/// Mean and spread of (measured energy per H2 - e_fci) for each N.
inline ErrorStats error_stats(const std::map<std::size_t, std::vector<double>>& energies_per_h2, double e_fci,
                              double e_hf) {
  if (energies_per_h2.empty()) throw InvalidArgument("no samples for error statistics");
  ErrorStats out;
  out.hartree_fock_kcal = units::to_kcal(e_hf - e_fci);
  for (const auto& [n, es] : energies_per_h2) {
    if (es.empty()) throw InvalidArgument("no samples for N = " + std::to_string(n));
    ErrorStatPoint p;
    p.n = n;
    p.samples = es.size();
    double sum = 0;
    for (double e : es) sum += units::to_kcal(e - e_fci);
    p.mean_error_kcal = sum / static_cast<double>(es.size());
    if (es.size() > 1) {
      double ss = 0;
      for (double e : es) {
        const double d = units::to_kcal(e - e_fci) - p.mean_error_kcal;
        ss += d * d;
      }
      p.stddev_kcal = std::sqrt(ss / static_cast<double>(es.size() - 1));
    }
    out.points.push_back(p);
  }
  return out;
}

inline double sample_mean(std::span<const double> v) {
  if (v.empty()) throw InvalidArgument("mean of empty sample");
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

inline double sample_stddev(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = sample_mean(v);
  double ss = 0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

/// Per-N samples of energy per H2 (kcal/mol) plus a shot-noise stddev floor
/// used when the sample spread is zero.
struct SizeSeries {
  std::vector<double> energies_kcal;
  double shot_noise_stddev_kcal = 0.0;
};

/// Size-consistency regression: x = N * qubits_per_h2, y = mean energy per
/// H2, weight = 1 / sample variance at that N.
inline RegressionResult fit_size_consistency(const std::map<std::size_t, SizeSeries>& series,
                                             std::size_t qubits_per_h2) {
  std::vector<WlsPoint> pts;
  for (const auto& [n, s] : series) {
    double sd = sample_stddev(s.energies_kcal);
    if (!(sd > 0.0)) sd = s.shot_noise_stddev_kcal;
    if (!(sd > 0.0)) throw InvalidArgument("N = " + std::to_string(n) + " has zero spread and no shot-noise floor");
    pts.push_back({static_cast<double>(n * qubits_per_h2), sample_mean(s.energies_kcal), sd});
  }
  return wls_fit(pts);
}

}  // namespace sizecon
