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

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "sizecon/circuit.hpp"
#include "sizecon/device.hpp"
#include "sizecon/errors.hpp"
#include "sizecon/rng.hpp"
#include "sizecon/statevector.hpp"

namespace sizecon {

/// Histogram of measured bitstrings; character k of a key is logical qubit k.
struct CountsTable {
  std::size_t width = 0;
  std::uint64_t shots = 0;
  std::map<std::string, std::uint64_t> counts;
  std::string measured_basis;

  std::string to_csv() const {
    std::string out = "bitstring,count\n";
    for (const auto& [b, c] : counts) out += b + "," + std::to_string(c) + "\n";
    return out;
  }
};

inline std::string bits_to_string(std::uint64_t bits, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t q = 0; q < width; ++q)
    if (bits & (std::uint64_t{1} << (width - 1 - q))) s[q] = '1';
  return s;
}

namespace detail {

struct NoisyGate {
  Gate gate;  // local qubit indices
  double error = 0.0;
};

/// Qubits coupled (directly or transitively) by two-qubit gates are simulated
/// together; distinct components stay in a product state for every
/// trajectory and are sampled independently.
struct Component {
  std::vector<std::size_t> qubits;  // logical, ascending
  std::vector<NoisyGate> gates;
  std::vector<Gate> basis_change;
  std::vector<double> p10, p01;
  std::vector<double> cumulative;  // noiseless outcome CDF

  std::size_t width() const { return qubits.size(); }

  StateVector final_state(const std::vector<std::pair<std::size_t, std::uint32_t>>& faults) const {
    StateVector psi = basis_state(width());
    std::size_t f = 0;
    for (std::size_t g = 0; g < gates.size(); ++g) {
      apply_gate(psi, gates[g].gate);
      for (; f < faults.size() && faults[f].first == g; ++f) {
        const Gate& gate = gates[g].gate;
        // fault code: Pauli on each support qubit, base 4, excluding all-identity
        std::uint32_t code = faults[f].second + 1;
        for (std::size_t k = 0; k < gate.arity(); ++k) {
          apply_pauli(psi, gate.targets[k], static_cast<Pauli>(code & 3));
          code >>= 2;
        }
      }
    }
    for (const auto& g : basis_change) apply_gate(psi, g);
    return psi;
  }

  static std::vector<double> cdf(const StateVector& psi) {
    std::vector<double> c(static_cast<std::size_t>(psi.size()));
    double acc = 0.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) c[static_cast<std::size_t>(i)] = acc += std::norm(psi(i));
    return c;
  }

  static std::uint64_t sample(const std::vector<double>& cdf, double u) {
    const double x = u * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), x);
    if (it == cdf.end()) --it;
    return static_cast<std::uint64_t>(it - cdf.begin());
  }

  /// One trajectory; returns the local outcome (bit k of the result, counted
  /// from the most significant end, is local qubit k).
  std::uint64_t trajectory(RandomStream& rng, std::vector<std::pair<std::size_t, std::uint32_t>>& faults) const {
    faults.clear();
    for (std::size_t g = 0; g < gates.size(); ++g) {
      if (rng.uniform() < gates[g].error) {
        const std::uint32_t choices = gates[g].gate.arity() == 2 ? 15 : 3;
        faults.emplace_back(g, static_cast<std::uint32_t>(rng.below(choices)));
      }
    }
    std::uint64_t out;
    const double u = rng.uniform();
    if (faults.empty()) {
      out = sample(cumulative, u);
    } else {
      out = sample(cdf(final_state(faults)), u);
    }
    const std::size_t w = width();
    for (std::size_t k = 0; k < w; ++k) {
      const std::uint64_t m = std::uint64_t{1} << (w - 1 - k);
      const double r = rng.uniform();
      if (out & m) {
        if (r < p01[k]) out &= ~m;
      } else if (r < p10[k]) {
        out |= m;
      }
    }
    return out;
  }
};

inline std::vector<Component> split_components(const Circuit& circuit, const Circuit& basis_change,
                                               const DeviceModel& device, std::span<const std::size_t> physical) {
  const std::size_t n = circuit.width();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Circuit* c : {&circuit, &basis_change})
    for (const auto& g : c->gates())
      if (g.arity() == 2) parent[find(g.targets[0])] = find(g.targets[1]);

  std::map<std::size_t, std::size_t> root_to_component;
  std::vector<Component> comps;
  std::vector<std::size_t> local(n);
  for (std::size_t q = 0; q < n; ++q) {
    auto [it, fresh] = root_to_component.emplace(find(q), comps.size());
    if (fresh) comps.emplace_back();
    Component& c = comps[it->second];
    local[q] = c.qubits.size();
    c.qubits.push_back(q);
    const auto& cal = device.qubit(physical[q]);
    c.p10.push_back(cal.readout_p10);
    c.p01.push_back(cal.readout_p01);
  }
  auto localize = [&](Gate g) {
    for (std::size_t k = 0; k < g.arity(); ++k) g.targets[k] = local[g.targets[k]];
    return g;
  };
  for (const auto& g : circuit.gates()) {
    const double p = g.arity() == 2 ? device.pair_error(physical[g.targets[0]], physical[g.targets[1]])
                                    : device.qubit(physical[g.targets[0]]).single_qubit_error;
    comps[root_to_component[find(g.targets[0])]].gates.push_back({localize(g), p});
  }
  for (const auto& g : basis_change.gates()) comps[root_to_component[find(g.targets[0])]].basis_change.push_back(localize(g));
  for (auto& c : comps) c.cumulative = Component::cdf(c.final_state({}));
  return comps;
}

}  // namespace detail

struct ShotOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Shot-based noisy execution. Each shot is one stochastic trajectory: after
/// every gate of `circuit` a uniformly random non-identity Pauli is inserted on
/// the gate's support with the mapped qubit's (or pair's) depolarizing
/// probability; `basis_change` is applied noiselessly, one bitstring is drawn
/// and each bit is flipped with the mapped qubit's readout confusion
/// probability. Shot s draws from Philox stream (seed, s * components + c), so
/// the table is identical for any thread count.
inline CountsTable run_shots(const Circuit& circuit, const DeviceModel& device, std::span<const std::size_t> physical_map,
                             const Circuit& basis_change, std::uint64_t shots, std::uint64_t seed,
                             std::string measured_basis = {}, ShotOptions opts = {}) {
  const std::size_t n = circuit.width();
  if (n == 0) throw InvalidArgument("circuit has zero width");
  if (n > 64) throw InvalidArgument("run_shots supports at most 64 qubits");
  if (physical_map.size() != n)
    throw InvalidArgument("physical map has " + std::to_string(physical_map.size()) + " entries for a " +
                          std::to_string(n) + "-qubit circuit");
  if (basis_change.width() != 0 && basis_change.width() != n)
    throw InvalidArgument("basis change width does not match circuit width");
  if (shots == 0) throw InvalidArgument("shots must be >= 1");
  std::vector<std::size_t> sorted(physical_map.begin(), physical_map.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("physical map repeats a qubit");
  for (std::size_t p : physical_map)
    if (p >= device.size()) throw InvalidArgument("physical qubit " + std::to_string(p) + " absent from device");

  const auto comps = detail::split_components(circuit, basis_change, device, physical_map);
  const std::uint64_t n_comp = comps.size();

  auto run_range = [&](std::uint64_t begin, std::uint64_t end, std::unordered_map<std::uint64_t, std::uint64_t>& hist) {
    std::vector<std::pair<std::size_t, std::uint32_t>> faults;
    for (std::uint64_t s = begin; s < end; ++s) {
      std::uint64_t bits = 0;
      for (std::uint64_t c = 0; c < n_comp; ++c) {
        RandomStream rng(seed, s * n_comp + c);
        const auto& comp = comps[c];
        const std::uint64_t local = comp.trajectory(rng, faults);
        const std::size_t w = comp.width();
        for (std::size_t k = 0; k < w; ++k)
          if (local & (std::uint64_t{1} << (w - 1 - k))) bits |= std::uint64_t{1} << (n - 1 - comp.qubits[k]);
      }
      ++hist[bits];
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, (shots + 1023) / 1024));
  threads = std::max(threads, 1u);
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partial(threads);
  if (threads == 1) {
    run_range(0, shots, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t b = shots * t / threads, e = shots * (t + 1) / threads;
      pool.emplace_back([&, b, e, t] { run_range(b, e, partial[t]); });
    }
  }

  CountsTable table;
  table.width = n;
  table.shots = shots;
  table.measured_basis = std::move(measured_basis);
  for (const auto& h : partial)
    for (const auto& [bits, c] : h) table.counts[bits_to_string(bits, n)] += c;
  return table;
}

}  // namespace sizecon
