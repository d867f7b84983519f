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

#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "sizecon/circuit.hpp"
#include "sizecon/errors.hpp"
#include "sizecon/pauli.hpp"
#include "sizecon/simulator.hpp"

namespace sizecon {

/// One Hamiltonian term of one subsystem, read out of a group's bitstrings
/// as the parity of `register_qubits`.
struct TermReadout {
  std::size_t subsystem = 0;
  PauliString sub_string{std::vector<Pauli>{Pauli::I}};
  double coefficient = 0.0;
  std::vector<std::size_t> register_qubits;
};

struct MeasurementGroup {
  std::string basis;                 // one letter per register qubit
  std::vector<PauliString> members;  // full-register strings measured by this group
  Circuit basis_change;
  std::vector<TermReadout> readouts;

  bool is_computational() const { return basis.find_first_not_of('Z') == std::string::npos; }
};

/// Measurement schedule for N copies of a subsystem Hamiltonian; subsystem n
/// occupies register qubits [n*w, (n+1)*w).
struct MeasurementPlan {
  std::size_t subsystem_width = 0;
  std::size_t n_subsystems = 0;
  double constant = 0.0;  // identity coefficient of the subsystem Hamiltonian
  std::vector<MeasurementGroup> groups;

  std::size_t width() const { return subsystem_width * n_subsystems; }

  std::size_t computational_group() const {
    for (std::size_t g = 0; g < groups.size(); ++g)
      if (groups[g].is_computational()) return g;
    throw InvalidArgument("plan has no computational-basis group");
  }
};

/// Rotation taking the eigenbasis of `p` to the computational basis on qubit q.
inline void append_basis_rotation(Circuit& c, std::size_t q, Pauli p) {
  switch (p) {
    case Pauli::X: c.add(Gate::ry(q, -std::numbers::pi / 2)); break;
    case Pauli::Y:
      c.add(Gate::rz(q, -std::numbers::pi / 2));
      c.add(Gate::ry(q, -std::numbers::pi / 2));
      break;
    default: break;
  }
}

/// Groups the subsystem's strings qubit-wise and replicates each group's
/// basis across all N blocks, so one group measures P^(x)N for every member
/// P at once. A computational-basis group is always present (populations are
/// read from it); the group count does not depend on N.
inline MeasurementPlan build_plan(const PauliSum& h_sub, std::size_t n_subsystems) {
  const std::size_t w = h_sub.width();
  if (w != 1 && w != 2 && w != 4) throw InvalidArgument("unsupported subsystem width " + std::to_string(w));
  if (n_subsystems == 0) throw InvalidArgument("need at least one subsystem");
  MeasurementPlan plan;
  plan.subsystem_width = w;
  plan.n_subsystems = n_subsystems;
  plan.constant = h_sub.identity_coefficient();

  const auto strings = h_sub.non_identity_strings();
  auto sub_groups = qubitwise_groups(strings);
  auto all_z = [](const std::vector<PauliString>& g) {
    for (const auto& s : g)
      for (Pauli p : s.letters())
        if (p != Pauli::I && p != Pauli::Z) return false;
    return true;
  };
  if (std::none_of(sub_groups.begin(), sub_groups.end(), all_z)) sub_groups.emplace_back();

  const std::size_t width = w * n_subsystems;
  for (const auto& sg : sub_groups) {
    std::vector<Pauli> sub_basis(w, Pauli::Z);
    for (const auto& s : sg)
      for (std::size_t q = 0; q < w; ++q)
        if (s[q] != Pauli::I) sub_basis[q] = s[q];
    MeasurementGroup g;
    g.basis_change = Circuit(width);
    for (std::size_t n = 0; n < n_subsystems; ++n) {
      for (std::size_t q = 0; q < w; ++q) {
        g.basis.push_back(to_char(sub_basis[q]));
        append_basis_rotation(g.basis_change, n * w + q, sub_basis[q]);
      }
    }
    for (std::size_t n = 0; n < n_subsystems; ++n)
      for (const auto& s : sg) {
        TermReadout t{n, s, h_sub.coefficient(s), {}};
        for (std::size_t q : s.support()) t.register_qubits.push_back(n * w + q);
        std::vector<Pauli> full(width, Pauli::I);
        for (std::size_t q = 0; q < w; ++q) full[n * w + q] = s[q];
        g.members.emplace_back(std::move(full));
        g.readouts.push_back(std::move(t));
      }
    plan.groups.push_back(std::move(g));
  }
  return plan;
}

namespace detail {

inline void check_counts(const MeasurementPlan& plan, std::span<const CountsTable> counts) {
  if (counts.size() != plan.groups.size())
    throw InvalidArgument("expected " + std::to_string(plan.groups.size()) + " count tables, got " +
                          std::to_string(counts.size()));
  for (const auto& t : counts) {
    if (t.shots == 0) throw InvalidArgument("count table with zero shots");
    if (t.shots != counts.front().shots) throw InvalidArgument("count tables have unequal shot totals");
    for (const auto& [b, c] : t.counts)
      if (b.size() != plan.width())
        throw InvalidArgument("bitstring '" + b + "' does not match register width " + std::to_string(plan.width()));
  }
}

inline int parity_sign(const std::string& bits, const std::vector<std::size_t>& qubits) {
  int ones = 0;
  for (std::size_t q : qubits) ones += bits[q] == '1';
  return (ones & 1) ? -1 : 1;
}

/// Per-subsystem running sums of y and y^2 where y is the subsystem's share
/// of one shot of the group.
inline void group_moments(const MeasurementGroup& g, const CountsTable& t, std::size_t n_subsystems,
                          std::vector<double>& sum, std::vector<double>& sum_sq) {
  std::vector<double> y(n_subsystems);
  for (const auto& [bits, count] : t.counts) {
    std::fill(y.begin(), y.end(), 0.0);
    for (const auto& r : g.readouts) y[r.subsystem] += r.coefficient * parity_sign(bits, r.register_qubits);
    for (std::size_t n = 0; n < n_subsystems; ++n) {
      sum[n] += y[n] * static_cast<double>(count);
      sum_sq[n] += y[n] * y[n] * static_cast<double>(count);
    }
  }
}

}  // namespace detail

/// Energy of every subsystem from the shared measurement record:
/// E_n = constant + sum over n's terms of coefficient * <parity>.
inline std::vector<double> estimate_energies(const MeasurementPlan& plan, std::span<const CountsTable> counts) {
  detail::check_counts(plan, counts);
  std::vector<double> energy(plan.n_subsystems, plan.constant);
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    std::vector<double> sum(plan.n_subsystems, 0.0), sum_sq(plan.n_subsystems, 0.0);
    detail::group_moments(plan.groups[g], counts[g], plan.n_subsystems, sum, sum_sq);
    for (std::size_t n = 0; n < plan.n_subsystems; ++n) energy[n] += sum[n] / static_cast<double>(counts[g].shots);
  }
  return energy;
}

/// Shot-noise variance of each subsystem energy estimate (sum over groups of
/// the sample variance of the per-shot contribution divided by shots).
inline std::vector<double> estimate_energy_variances(const MeasurementPlan& plan, std::span<const CountsTable> counts) {
  detail::check_counts(plan, counts);
  std::vector<double> var(plan.n_subsystems, 0.0);
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    std::vector<double> sum(plan.n_subsystems, 0.0), sum_sq(plan.n_subsystems, 0.0);
    detail::group_moments(plan.groups[g], counts[g], plan.n_subsystems, sum, sum_sq);
    const double s = static_cast<double>(counts[g].shots);
    if (s < 2) continue;
    for (std::size_t n = 0; n < plan.n_subsystems; ++n) {
      const double mean = sum[n] / s;
      const double sample_var = std::max(0.0, (sum_sq[n] - s * mean * mean) / (s - 1));
      var[n] += sample_var / s;
    }
  }
  return var;
}

struct SubsystemPopulation {
  double hf = 0.0;
  double single_excitation = 0.0;
  double double_excitation = 0.0;
  double number_violating = 0.0;
};

using PopulationBreakdown = std::vector<SubsystemPopulation>;

/// Classifies each subsystem's block of computational-basis outcomes:
///   1 qubit: 0 -> HF, 1 -> double;
///   2 qubits: 00 -> HF, 11 -> double, 01/10 -> single;
///   4 qubits: 1100 -> HF, 0011 -> double, other weight-2 strings -> single,
///             any other weight -> number violating.
inline PopulationBreakdown extract_populations(const CountsTable& z_counts, std::size_t representation,
                                               std::size_t n_subsystems) {
  if (representation != 1 && representation != 2 && representation != 4)
    throw InvalidArgument("unsupported representation " + std::to_string(representation));
  if (z_counts.width != representation * n_subsystems)
    throw InvalidArgument("counts width " + std::to_string(z_counts.width) + " does not match " +
                          std::to_string(n_subsystems) + " subsystems of " + std::to_string(representation) +
                          " qubits");
  if (z_counts.measured_basis.find_first_not_of('Z') != std::string::npos)
    throw InvalidArgument("populations need computational-basis counts, got basis " + z_counts.measured_basis);
  if (z_counts.shots == 0) throw InvalidArgument("count table with zero shots");
  PopulationBreakdown out(n_subsystems);
  for (const auto& [bits, count] : z_counts.counts) {
    if (bits.size() != z_counts.width) throw InvalidArgument("bitstring width mismatch in population counts");
    const double c = static_cast<double>(count);
    for (std::size_t n = 0; n < n_subsystems; ++n) {
      const std::string_view block(bits.data() + n * representation, representation);
      auto& p = out[n];
      if (representation == 1) {
        (block == "0" ? p.hf : p.double_excitation) += c;
      } else if (representation == 2) {
        if (block == "00") p.hf += c;
        else if (block == "11") p.double_excitation += c;
        else p.single_excitation += c;
      } else {
        const auto weight = std::count(block.begin(), block.end(), '1');
        if (weight != 2) p.number_violating += c;
        else if (block == "1100") p.hf += c;
        else if (block == "0011") p.double_excitation += c;
        else p.single_excitation += c;
      }
    }
  }
  const double shots = static_cast<double>(z_counts.shots);
  for (auto& p : out) {
    p.hf /= shots;
    p.single_excitation /= shots;
    p.double_excitation /= shots;
    p.number_violating /= shots;
  }
  return out;
}

}  // namespace sizecon
