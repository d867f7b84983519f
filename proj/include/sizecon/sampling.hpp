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
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "sizecon/device.hpp"
#include "sizecon/errors.hpp"
#include "sizecon/rng.hpp"

namespace sizecon {

/// Number of top-ranked physical qubits a selective set spans.
inline constexpr std::size_t kSelectivePool = 16;

/// Composite score = readout * mean readout error + two_qubit * mean
/// incident two-qubit error. Lower is better.
struct RankingWeights {
  double readout = 1.0;
  double two_qubit = 1.0;
};

inline std::vector<double> qubit_scores(const DeviceModel& device, RankingWeights w = {}) {
  const std::size_t n = device.size();
  std::vector<double> pair_sum(n, 0.0);
  std::vector<std::size_t> pair_count(n, 0);
  for (const auto& [k, p] : device.pair_errors()) {
    pair_sum[k.first] += p;
    pair_sum[k.second] += p;
    ++pair_count[k.first];
    ++pair_count[k.second];
  }
  std::vector<double> score(n);
  for (std::size_t q = 0; q < n; ++q) {
    const double two = pair_count[q] ? pair_sum[q] / static_cast<double>(pair_count[q]) : 0.0;
    score[q] = w.readout * device.qubits()[q].mean_readout_error() + w.two_qubit * two;
  }
  return score;
}

/// Physical qubits, best first; ties keep index order.
inline std::vector<std::size_t> rank_qubits(const DeviceModel& device, RankingWeights w = {}) {
  const auto score = qubit_scores(device, w);
  std::vector<std::size_t> order(device.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
  return order;
}

struct PlanEntry {
  std::size_t set = 0;
  std::size_t sample = 0;
  std::vector<std::vector<std::size_t>> blocks;  // one physical block per subsystem
};

struct SamplingPlan {
  std::size_t n_subsystems = 0;
  std::size_t block_width = 0;
  std::size_t n_samples_per_set = 0;
  std::size_t n_sets = 0;
  std::vector<PlanEntry> entries;

  /// CSV: set,sample,subsystem,qubits (qubits space separated).
  std::string to_csv() const {
    std::string out = "set,sample,subsystem,qubits\n";
    for (const auto& e : entries)
      for (std::size_t n = 0; n < e.blocks.size(); ++n) {
        out += std::to_string(e.set) + "," + std::to_string(e.sample) + "," + std::to_string(n) + ",";
        for (std::size_t k = 0; k < e.blocks[n].size(); ++k) out += (k ? " " : "") + std::to_string(e.blocks[n][k]);
        out += "\n";
      }
    return out;
  }
};

namespace detail {
inline std::vector<std::vector<std::size_t>> chunk(std::span<const std::size_t> qubits, std::size_t width) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i + width <= qubits.size(); i += width)
    blocks.emplace_back(qubits.begin() + static_cast<std::ptrdiff_t>(i),
                        qubits.begin() + static_cast<std::ptrdiff_t>(i + width));
  return blocks;
}
}  // namespace detail

/// Each set partitions the top 16 qubits of `pool` into n = 16 / (N * width)
/// disjoint samples of N blocks; the set is repeated k times.
inline SamplingPlan selective_plan(std::span<const std::size_t> pool, std::size_t n_subsystems, std::size_t width,
                                   std::size_t k) {
  if (pool.size() < kSelectivePool) throw InvalidArgument("selective sampling needs at least 16 ranked qubits");
  if (n_subsystems == 0 || width == 0 || k == 0) throw InvalidArgument("N, width and k must be positive");
  const std::size_t per_sample = n_subsystems * width;
  if (kSelectivePool % per_sample != 0)
    throw InvalidArgument("N * width = " + std::to_string(per_sample) +
                          " does not divide the 16-qubit pool; use random sampling");
  SamplingPlan plan;
  plan.n_subsystems = n_subsystems;
  plan.block_width = width;
  plan.n_samples_per_set = kSelectivePool / per_sample;
  plan.n_sets = k;
  const auto top = pool.first(kSelectivePool);
  for (std::size_t set = 0; set < k; ++set)
    for (std::size_t s = 0; s < plan.n_samples_per_set; ++s)
      plan.entries.push_back({set, s, detail::chunk(top.subspan(s * per_sample, per_sample), width)});
  return plan;
}

/// s independent draws of N disjoint width-blocks, uniformly from `pool`
/// (partial Fisher-Yates on Philox stream (seed, 0)).
inline SamplingPlan random_plan(std::span<const std::size_t> pool, std::size_t n_subsystems, std::size_t width,
                                std::size_t repetitions, std::uint64_t seed) {
  if (n_subsystems == 0 || width == 0 || repetitions == 0) throw InvalidArgument("N, width and s must be positive");
  const std::size_t need = n_subsystems * width;
  if (pool.size() < need)
    throw InvalidArgument("pool of " + std::to_string(pool.size()) + " qubits is smaller than N * width = " +
                          std::to_string(need));
  SamplingPlan plan;
  plan.n_subsystems = n_subsystems;
  plan.block_width = width;
  plan.n_samples_per_set = 1;
  plan.n_sets = repetitions;
  RandomStream rng(seed, 0);
  std::vector<std::size_t> work(pool.begin(), pool.end());
  for (std::size_t r = 0; r < repetitions; ++r) {
    for (std::size_t i = 0; i < need; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(work.size() - i));
      std::swap(work[i], work[j]);
    }
    plan.entries.push_back({r, 0, detail::chunk(std::span<const std::size_t>(work).first(need), width)});
  }
  return plan;
}

}  // namespace sizecon
