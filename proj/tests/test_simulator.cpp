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
#include <numbers>
#include <random>

#include "oracles/density_oracle.hpp"
#include "sizecon/simulator.hpp"

using namespace sizecon;

namespace {

const Circuit kEmptyBasis(0);

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

std::vector<double> frequencies(const CountsTable& t) {
  std::vector<double> f(std::size_t{1} << t.width, 0.0);
  for (const auto& [bits, c] : t.counts) f[std::stoull(bits, nullptr, 2)] = double(c) / double(t.shots);
  return f;
}

// Every outcome frequency within 4 binomial standard errors (plus a floor for
// outcomes with vanishing probability).
void expect_matches(const std::vector<double>& freq, const std::vector<double>& p, std::uint64_t shots) {
  ASSERT_EQ(freq.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double se = std::sqrt(std::max(p[i] * (1 - p[i]), 1.0 / double(shots)) / double(shots));
    EXPECT_NEAR(freq[i], p[i], 4 * se) << "outcome " << i;
  }
}

DeviceModel noisy_device(std::size_t n, std::uint64_t seed) {
  SyntheticCalibration cfg;
  cfg.n_qubits = n;
  cfg.readout_median = 0.05;
  cfg.single_qubit_median = 0.05;
  cfg.two_qubit_median = 0.1;
  cfg.seed = seed;
  return generate_calibration(cfg);
}

}  // namespace

TEST(run_shots, noiseless_identity_reads_zero) {
  Circuit c(3);
  const auto t = run_shots(c, DeviceModel::noiseless(3), identity_map(3), kEmptyBasis, 1000, 1, "ZZZ");
  ASSERT_EQ(t.counts.size(), 1u);
  EXPECT_EQ(t.counts.at("000"), 1000u);
  EXPECT_EQ(t.measured_basis, "ZZZ");
  EXPECT_EQ(t.to_csv(), "bitstring,count\n000,1000\n");
}

TEST(run_shots, readout_p10_is_binomial) {
  DeviceModel d = DeviceModel::noiseless(1);
  d.qubit(0).readout_p10 = 0.1;
  const std::uint64_t shots = 100000;
  const auto t = run_shots(Circuit(1), d, identity_map(1), kEmptyBasis, shots, 7);
  const double frac = double(t.counts.count("1") ? t.counts.at("1") : 0) / shots;
  EXPECT_NEAR(frac, 0.1, 3 * std::sqrt(0.1 * 0.9 / shots));
}

TEST(run_shots, readout_p01_is_binomial) {
  DeviceModel d = DeviceModel::noiseless(2);
  d.qubit(1).readout_p01 = 0.2;
  Circuit c(1);
  c.add(Gate::x(0));
  const std::uint64_t shots = 100000;
  const std::vector<std::size_t> map = {1};
  const auto t = run_shots(c, d, map, kEmptyBasis, shots, 8);
  const double frac = double(t.counts.at("0")) / shots;
  EXPECT_NEAR(frac, 0.2, 3 * std::sqrt(0.2 * 0.8 / shots));
}

TEST(run_shots, noiseless_distribution_passes_chi_square) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(-3, 3);
  Circuit c(3);
  c.add(Gate::ry(0, angle(rng))).add(Gate::ry(1, angle(rng))).add(Gate::cnot(0, 2)).add(Gate::ry(2, angle(rng)));
  c.add(Gate::rz(1, angle(rng))).add(Gate::cz(1, 2)).add(Gate::ry(1, angle(rng)));
  const StateVector psi = simulate(c);
  const std::uint64_t shots = 100000;
  const auto t = run_shots(c, DeviceModel::noiseless(3), identity_map(3), kEmptyBasis, shots, 9);
  const auto f = frequencies(t);
  double chi2 = 0;
  int dof = -1;
  for (std::size_t i = 0; i < 8; ++i) {
    const double e = std::norm(psi(static_cast<Eigen::Index>(i))) * shots;
    if (e < 1e-9) {
      EXPECT_EQ(f[i], 0.0);
      continue;
    }
    chi2 += (f[i] * shots - e) * (f[i] * shots - e) / e;
    ++dof;
  }
  ASSERT_LE(dof, 7);
  // chi-square critical values at p = 1e-3 for 1..7 degrees of freedom.
  const double crit[] = {0, 10.83, 13.82, 16.27, 18.47, 20.52, 22.46, 24.32};
  EXPECT_LT(chi2, crit[dof]);
}

TEST(run_shots, matches_density_matrix_oracle) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> angle(-3, 3);
  const std::uint64_t shots = 200000;
  for (std::size_t width = 1; width <= 3; ++width)
    for (int trial = 0; trial < 3; ++trial) {
      Circuit c(width);
      for (int k = 0; k < 6; ++k) {
        const std::size_t a = rng() % width;
        c.add(Gate::ry(a, angle(rng)));
        if (width > 1) c.add(Gate::cnot(a, (a + 1 + rng() % (width - 1)) % width));
        c.add(Gate::rz(rng() % width, angle(rng)));
      }
      Circuit basis(width);
      basis.add(Gate::ry(0, -std::numbers::pi / 2));
      const DeviceModel d = noisy_device(width + 2, 100 + trial);
      std::vector<std::size_t> map(width);
      for (std::size_t q = 0; q < width; ++q) map[q] = width + 1 - q;
      const auto t = run_shots(c, d, map, basis, shots, 1000 + trial);
      expect_matches(frequencies(t), oracle::noisy_distribution(c, d, map, basis), shots);
    }
}

TEST(run_shots, product_components_match_oracle) {
  // Two disconnected entangled pairs plus a lone qubit.
  Circuit c(5);
  c.add(Gate::ry(0, 1.1)).add(Gate::cnot(0, 3)).add(Gate::ry(1, -0.4)).add(Gate::ry(2, 2.0));
  c.add(Gate::cz(2, 4)).add(Gate::ry(4, 0.7));
  const DeviceModel d = noisy_device(5, 3);
  const auto map = identity_map(5);
  const std::uint64_t shots = 200000;
  const auto t = run_shots(c, d, map, kEmptyBasis, shots, 77);
  expect_matches(frequencies(t), oracle::noisy_distribution(c, d, map, kEmptyBasis), shots);
}

TEST(run_shots, depolarizing_shrinks_z_expectation) {
  Circuit c(1);
  c.add(Gate::ry(0, 0.6));
  DeviceModel d = DeviceModel::noiseless(1);
  d.qubit(0).single_qubit_error = 0.3;
  const double ideal = std::cos(0.6);
  int shrunk = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t = run_shots(c, d, identity_map(1), kEmptyBasis, 20000, seed);
    const auto f = frequencies(t);
    if (std::abs(f[0] - f[1]) < std::abs(ideal)) ++shrunk;
    // Exact channel value: (1 - 4p/3) cos(theta).
    EXPECT_NEAR(f[0] - f[1], (1 - 0.4) * ideal, 4 * std::sqrt(1.0 / 20000));
  }
  EXPECT_EQ(shrunk, 10);
}

TEST(run_shots, deterministic_for_any_thread_count) {
  Circuit c(4);
  c.add(Gate::ry(0, 0.3)).add(Gate::cnot(0, 1)).add(Gate::ry(2, 1.3)).add(Gate::cz(2, 3));
  const DeviceModel d = noisy_device(4, 5);
  const auto map = identity_map(4);
  ShotOptions one{1}, three{3};
  const auto a = run_shots(c, d, map, kEmptyBasis, 10000, 5, "", one);
  const auto b = run_shots(c, d, map, kEmptyBasis, 10000, 5, "", three);
  const auto e = run_shots(c, d, map, kEmptyBasis, 10000, 6, "", one);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_NE(a.counts, e.counts);
  std::uint64_t total = 0;
  for (const auto& [bits, n] : a.counts) {
    EXPECT_EQ(bits.size(), 4u);
    total += n;
  }
  EXPECT_EQ(total, 10000u);
}

TEST(run_shots, rejects_bad_arguments) {
  Circuit c(2);
  c.add(Gate::cnot(0, 1));
  const DeviceModel d = DeviceModel::noiseless(3);
  const std::vector<std::size_t> ok = {0, 1}, short_map = {0}, repeated = {1, 1}, absent = {0, 3};
  EXPECT_THROW(run_shots(c, d, short_map, kEmptyBasis, 10, 1), InvalidArgument);
  EXPECT_THROW(run_shots(c, d, repeated, kEmptyBasis, 10, 1), InvalidArgument);
  EXPECT_THROW(run_shots(c, d, absent, kEmptyBasis, 10, 1), InvalidArgument);
  EXPECT_THROW(run_shots(c, d, ok, kEmptyBasis, 0, 1), InvalidArgument);
  EXPECT_THROW(run_shots(c, d, ok, Circuit(3), 10, 1), InvalidArgument);
  DeviceModel sparse(std::vector<QubitCalibration>(2));
  EXPECT_THROW(run_shots(c, sparse, ok, kEmptyBasis, 10, 1), InvalidArgument);
}

TEST(device, json_round_trip_and_hash) {
  const DeviceModel d = noisy_device(6, 11);
  const DeviceModel back = parse_calibration(to_json(d).dump(2));
  EXPECT_EQ(to_json(back), to_json(d));
  EXPECT_EQ(calibration_hash(back), calibration_hash(d));
  EXPECT_NE(calibration_hash(d), calibration_hash(noisy_device(6, 12)));
}

TEST(device, synthetic_calibration_is_reproducible_and_heterogeneous) {
  SyntheticCalibration cfg;
  cfg.seed = 2026;
  const DeviceModel a = generate_calibration(cfg), b = generate_calibration(cfg);
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_EQ(a.size(), 24u);
  EXPECT_EQ(a.pair_errors().size(), 24u * 23u / 2);
  double lo = 1, hi = 0;
  for (const auto& q : a.qubits()) {
    lo = std::min(lo, q.mean_readout_error());
    hi = std::max(hi, q.mean_readout_error());
  }
  EXPECT_GT(hi / lo, 1.5);
  cfg.log_sigma = 0;
  const DeviceModel flat = generate_calibration(cfg);
  for (const auto& q : flat.qubits()) EXPECT_DOUBLE_EQ(q.readout_p10, 1e-2);
}

TEST(device, rejects_malformed_calibration) {
  EXPECT_THROW(parse_calibration("{"), ParseError);
  EXPECT_THROW(parse_calibration("[]"), ParseError);
  EXPECT_THROW(parse_calibration(R"({"qubits": [{"index": 0}]})"), ParseError);
  EXPECT_THROW(
      parse_calibration(R"({"qubits": [{"index": 0, "readout_p10": 2, "readout_p01": 0, "single_qubit_error": 0}]})"),
      ParseError);
  EXPECT_THROW(parse_calibration(R"({"qubits": [{"index": 1, "readout_p10": 0, "readout_p01": 0,
                                     "single_qubit_error": 0}]})"),
               ParseError);
  EXPECT_THROW(load_calibration("/nonexistent/cal.json"), IoError);
  EXPECT_THROW(DeviceModel::noiseless(2).qubit(2), InvalidArgument);
}
