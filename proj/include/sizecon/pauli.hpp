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
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sizecon/errors.hpp"

namespace sizecon {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char to_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

inline Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw InvalidArgument(std::string("not a Pauli letter: '") + c + "'");
  }
}

/// Exact phase i^k, k in {0,1,2,3}.
class Phase {
 public:
  constexpr Phase() = default;
  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr int power() const { return power_; }
  constexpr Phase operator*(Phase o) const { return Phase((power_ + o.power_) & 3); }
  constexpr bool operator==(const Phase&) const = default;

  std::complex<double> value() const {
    static constexpr double re[4] = {1, 0, -1, 0};
    static constexpr double im[4] = {0, 1, 0, -1};
    return {re[power_], im[power_]};
  }
  std::string str() const {
    static const char* names[4] = {"+1", "+i", "-1", "-i"};
    return names[power_];
  }

 private:
  constexpr explicit Phase(int k) : power_(static_cast<std::uint8_t>(k & 3)) {}
  std::uint8_t power_ = 0;
};

/// Tensor product of single-qubit Paulis; letter k acts on qubit k.
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw InvalidArgument("PauliString width must be >= 1");
  }

  static PauliString identity(std::size_t width) {
    return PauliString(std::vector<Pauli>(width, Pauli::I));
  }

  /// Parses the canonical text form, e.g. "ZIZI".
  static PauliString parse(std::string_view text) {
    std::vector<Pauli> letters;
    letters.reserve(text.size());
    for (char c : text) letters.push_back(pauli_from_char(c));
    return PauliString(std::move(letters));
  }

  std::size_t width() const { return letters_.size(); }
  Pauli operator[](std::size_t q) const { return letters_[q]; }
  std::span<const Pauli> letters() const { return letters_; }

  bool is_identity() const {
    return std::all_of(letters_.begin(), letters_.end(), [](Pauli p) { return p == Pauli::I; });
  }

  /// Qubits carrying a non-identity letter.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < letters_.size(); ++q)
      if (letters_[q] != Pauli::I) out.push_back(q);
    return out;
  }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Pauli p : letters_) s.push_back(to_char(p));
    return s;
  }

  auto operator<=>(const PauliString&) const = default;
  bool operator==(const PauliString&) const = default;

 private:
  std::vector<Pauli> letters_;
};

namespace detail {
inline void require_same_width(const PauliString& a, const PauliString& b) {
  if (a.width() != b.width())
    throw InvalidArgument("Pauli width mismatch: " + std::to_string(a.width()) + " vs " +
                          std::to_string(b.width()));
}
}  // namespace detail

/// a·b = phase · product.
inline std::pair<Phase, PauliString> multiply(const PauliString& a, const PauliString& b) {
  detail::require_same_width(a, b);
  std::vector<Pauli> out(a.width());
  int power = 0;
  for (std::size_t q = 0; q < a.width(); ++q) {
    const int x = static_cast<int>(a[q]);
    const int y = static_cast<int>(b[q]);
    out[q] = static_cast<Pauli>(x ^ y);
    if (x == 0 || y == 0 || x == y) continue;
    // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
    power += ((y - x + 3) % 3 == 1) ? 1 : 3;
  }
  Phase phase = Phase::one();
  for (int k = 0; k < (power & 3); ++k) phase = phase * Phase::i();
  return {phase, PauliString(std::move(out))};
}

inline bool commutes(const PauliString& a, const PauliString& b) {
  detail::require_same_width(a, b);
  std::size_t clashes = 0;
  for (std::size_t q = 0; q < a.width(); ++q)
    if (a[q] != Pauli::I && b[q] != Pauli::I && a[q] != b[q]) ++clashes;
  return clashes % 2 == 0;
}

/// Every position carries equal letters or at least one identity.
inline bool qubitwise_commutes(const PauliString& a, const PauliString& b) {
  detail::require_same_width(a, b);
  for (std::size_t q = 0; q < a.width(); ++q)
    if (a[q] != Pauli::I && b[q] != Pauli::I && a[q] != b[q]) return false;
  return true;
}

/// Real-weighted sum of equal-width Pauli strings. Terms are kept in string
/// order so iteration and serialization are deterministic.
class PauliSum {
 public:
  explicit PauliSum(std::size_t width) : width_(width) {
    if (width == 0) throw InvalidArgument("PauliSum width must be >= 1");
  }

  static PauliSum constant(std::size_t width, double c) {
    PauliSum s(width);
    s.add(PauliString::identity(width), c);
    return s;
  }

  std::size_t width() const { return width_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::map<PauliString, double>& terms() const { return terms_; }

  void add(const PauliString& p, double coefficient) {
    if (p.width() != width_)
      throw InvalidArgument("term width " + std::to_string(p.width()) + " does not match sum width " +
                            std::to_string(width_));
    terms_[p] += coefficient;
  }

  double coefficient(const PauliString& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0.0 : it->second;
  }

  /// Coefficient of the all-identity string.
  double identity_coefficient() const { return coefficient(PauliString::identity(width_)); }

  /// Drops terms with |coefficient| <= threshold.
  PauliSum& simplify(double threshold = 1e-14) {
    std::erase_if(terms_, [&](const auto& kv) { return std::abs(kv.second) <= threshold; });
    return *this;
  }

  /// Strings other than the identity, in term order.
  std::vector<PauliString> non_identity_strings() const {
    std::vector<PauliString> out;
    for (const auto& [p, c] : terms_)
      if (!p.is_identity()) out.push_back(p);
    return out;
  }

  PauliSum& operator+=(const PauliSum& o) {
    if (o.width_ != width_) throw InvalidArgument("PauliSum width mismatch in +=");
    for (const auto& [p, c] : o.terms_) terms_[p] += c;
    return *this;
  }
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }

  PauliSum& operator*=(double s) {
    for (auto& [p, c] : terms_) c *= s;
    return *this;
  }

  /// One line per term: "coefficient<TAB>string".
  std::string str() const {
    std::string out;
    char buf[64];
    for (const auto& [p, c] : terms_) {
      std::snprintf(buf, sizeof buf, "%.17g", c);
      out += buf;
      out += '\t';
      out += p.str();
      out += '\n';
    }
    return out;
  }

  static PauliSum parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::pair<PauliString, double>> parsed;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos) throw ParseError(lineno, "expected 'coefficient<TAB>string'");
      double c = 0;
      try {
        std::size_t used = 0;
        c = std::stod(line.substr(0, tab), &used);
        if (used != tab) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad coefficient '" + line.substr(0, tab) + "'");
      }
      try {
        parsed.emplace_back(PauliString::parse(line.substr(tab + 1)), c);
      } catch (const InvalidArgument& e) {
        throw ParseError(lineno, e.what());
      }
    }
    if (parsed.empty()) throw ParseError("empty PauliSum text");
    PauliSum sum(parsed.front().first.width());
    for (std::size_t k = 0; k < parsed.size(); ++k) {
      if (parsed[k].first.width() != sum.width()) throw ParseError("mixed widths in PauliSum text");
      sum.add(parsed[k].first, parsed[k].second);
    }
    return sum;
  }

 private:
  std::size_t width_;
  std::map<PauliString, double> terms_;
};

/// Pads every string of `sub` with identities so it acts on block
/// `subsystem_index` of `n_subsystems` equal blocks.
inline PauliSum embed(const PauliSum& sub, std::size_t subsystem_index, std::size_t n_subsystems) {
  if (subsystem_index >= n_subsystems)
    throw InvalidArgument("subsystem index " + std::to_string(subsystem_index) + " out of range for " +
                          std::to_string(n_subsystems) + " subsystems");
  const std::size_t w = sub.width();
  PauliSum out(w * n_subsystems);
  for (const auto& [p, c] : sub.terms()) {
    std::vector<Pauli> letters(w * n_subsystems, Pauli::I);
    std::copy(p.letters().begin(), p.letters().end(), letters.begin() + subsystem_index * w);
    out.add(PauliString(std::move(letters)), c);
  }
  return out;
}

/// Greedy first-fit partition into qubit-wise commuting groups, in input order.
inline std::vector<std::vector<PauliString>> qubitwise_groups(std::span<const PauliString> strings) {
  std::vector<std::vector<PauliString>> groups;
  for (const auto& s : strings) {
    auto fits = [&](const std::vector<PauliString>& g) {
      return std::all_of(g.begin(), g.end(), [&](const PauliString& m) { return qubitwise_commutes(s, m); });
    };
    auto it = std::find_if(groups.begin(), groups.end(), fits);
    if (it == groups.end())
      groups.push_back({s});
    else
      it->push_back(s);
  }
  return groups;
}

}  // namespace sizecon
