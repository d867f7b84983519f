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
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sizecon/errors.hpp"

namespace sizecon {

enum class GateKind { X, RY, RZ, CZ, CNOT };

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

inline bool is_two_qubit(GateKind k) { return k == GateKind::CZ || k == GateKind::CNOT; }
inline bool is_rotation(GateKind k) { return k == GateKind::RY || k == GateKind::RZ; }

/// For CNOT, targets[0] is the control and targets[1] the target.
struct Gate {
  GateKind kind = GateKind::X;
  std::array<std::size_t, 2> targets{};
  double angle = 0.0;

  std::size_t arity() const { return is_two_qubit(kind) ? 2 : 1; }

  static Gate x(std::size_t q) { return {GateKind::X, {q, 0}, 0.0}; }
  static Gate ry(std::size_t q, double theta) { return {GateKind::RY, {q, 0}, theta}; }
  static Gate rz(std::size_t q, double theta) { return {GateKind::RZ, {q, 0}, theta}; }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, {a, b}, 0.0}; }
  static Gate cnot(std::size_t control, std::size_t target) { return {GateKind::CNOT, {control, target}, 0.0}; }

  bool operator==(const Gate& o) const {
    if (kind != o.kind || targets[0] != o.targets[0]) return false;
    if (arity() == 2 && targets[1] != o.targets[1]) return false;
    return !is_rotation(kind) || angle == o.angle;
  }
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& add(const Gate& g) {
    for (std::size_t k = 0; k < g.arity(); ++k)
      if (g.targets[k] >= width_)
        throw InvalidArgument(std::string(gate_name(g.kind)) + " target " + std::to_string(g.targets[k]) +
                              " out of range for width " + std::to_string(width_));
    if (g.arity() == 2 && g.targets[0] == g.targets[1])
      throw InvalidArgument(std::string(gate_name(g.kind)) + " needs distinct qubits");
    if (is_rotation(g.kind) && !std::isfinite(g.angle)) throw InvalidArgument("rotation angle must be finite");
    gates_.push_back(g);
    return *this;
  }

  Circuit& append(const Circuit& other) {
    if (other.width_ != width_) throw InvalidArgument("cannot append circuits of different width");
    for (const auto& g : other.gates_) add(g);
    return *this;
  }

  std::size_t two_qubit_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.arity() == 2; }));
  }

  std::size_t count(GateKind k) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [k](const Gate& g) { return g.kind == k; }));
  }

  /// Number of layers when each gate is scheduled as early as possible.
  std::size_t depth() const {
    std::vector<std::size_t> level(width_, 0);
    std::size_t d = 0;
    for (const auto& g : gates_) {
      std::size_t l = level[g.targets[0]];
      if (g.arity() == 2) l = std::max(l, level[g.targets[1]]);
      ++l;
      level[g.targets[0]] = l;
      if (g.arity() == 2) level[g.targets[1]] = l;
      d = std::max(d, l);
    }
    return d;
  }

  /// Text form: a "# width=N" line, then one gate per line, "KIND targets [angle]".
  std::string str() const {
    std::string out = "# width=" + std::to_string(width_) + "\n";
    char buf[64];
    for (const auto& g : gates_) {
      out += gate_name(g.kind);
      for (std::size_t k = 0; k < g.arity(); ++k) out += " " + std::to_string(g.targets[k]);
      if (is_rotation(g.kind)) {
        std::snprintf(buf, sizeof buf, " %.17g", g.angle);
        out += buf;
      }
      out += '\n';
    }
    return out;
  }

  static Circuit parse(std::string_view text);

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t width_ = 0;
  std::vector<Gate> gates_;
};

inline Circuit Circuit::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::size_t width = 0;
  bool have_width = false;
  std::vector<std::pair<std::size_t, Gate>> gates;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] == '#') {
      const auto pos = line.find("width=");
      if (pos != std::string::npos) {
        try {
          width = std::stoul(line.substr(pos + 6));
          have_width = true;
        } catch (const std::exception&) {
          throw ParseError(lineno, "bad width comment");
        }
      }
      continue;
    }
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    Gate g;
    if (kind == "X") g.kind = GateKind::X;
    else if (kind == "RY") g.kind = GateKind::RY;
    else if (kind == "RZ") g.kind = GateKind::RZ;
    else if (kind == "CZ") g.kind = GateKind::CZ;
    else if (kind == "CNOT") g.kind = GateKind::CNOT;
    else throw ParseError(lineno, "unknown gate '" + kind + "'");
    for (std::size_t k = 0; k < g.arity(); ++k)
      if (!(fields >> g.targets[k])) throw ParseError(lineno, "missing qubit index");
    if (is_rotation(g.kind) && !(fields >> g.angle)) throw ParseError(lineno, "missing rotation angle");
    std::string extra;
    if (fields >> extra) throw ParseError(lineno, "trailing field '" + extra + "'");
    gates.emplace_back(lineno, g);
  }
  if (!have_width)
    for (const auto& [ln, g] : gates)
      for (std::size_t k = 0; k < g.arity(); ++k) width = std::max(width, g.targets[k] + 1);
  Circuit c(width);
  for (const auto& [ln, g] : gates) {
    try {
      c.add(g);
    } catch (const InvalidArgument& e) {
      throw ParseError(ln, e.what());
    }
  }
  return c;
}

/// Reverses gate order and negates rotation angles.
inline Circuit inverse(const Circuit& c) {
  Circuit out(c.width());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    Gate g = *it;
    if (is_rotation(g.kind)) g.angle = -g.angle;
    out.add(g);
  }
  return out;
}

/// Places copy n of `sub` on qubit block `blocks[n]` (block[k] = register
/// position of the copy's qubit k). Copies are emitted one after another but
/// never share qubits, so they execute in parallel.
inline Circuit compose(const Circuit& sub, std::size_t n_subsystems,
                       const std::vector<std::vector<std::size_t>>& blocks) {
  if (blocks.size() != n_subsystems)
    throw InvalidArgument("expected " + std::to_string(n_subsystems) + " qubit blocks, got " +
                          std::to_string(blocks.size()));
  std::set<std::size_t> used;
  std::size_t width = 0;
  for (const auto& b : blocks) {
    if (b.size() != sub.width())
      throw InvalidArgument("block width " + std::to_string(b.size()) + " does not match circuit width " +
                            std::to_string(sub.width()));
    for (std::size_t q : b) {
      if (!used.insert(q).second) throw InvalidArgument("qubit " + std::to_string(q) + " appears in two blocks");
      width = std::max(width, q + 1);
    }
  }
  Circuit out(width);
  for (const auto& b : blocks)
    for (Gate g : sub.gates()) {
      for (std::size_t k = 0; k < g.arity(); ++k) g.targets[k] = b[g.targets[k]];
      out.add(g);
    }
  return out;
}

/// Consecutive blocks [n*w, (n+1)*w) for n < n_subsystems.
inline std::vector<std::vector<std::size_t>> contiguous_blocks(std::size_t n_subsystems, std::size_t block_width) {
  std::vector<std::vector<std::size_t>> blocks(n_subsystems);
  for (std::size_t n = 0; n < n_subsystems; ++n)
    for (std::size_t k = 0; k < block_width; ++k) blocks[n].push_back(n * block_width + k);
  return blocks;
}

}  // namespace sizecon
