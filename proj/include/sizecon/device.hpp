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
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sizecon/errors.hpp"
#include "sizecon/rng.hpp"

namespace sizecon {

struct QubitCalibration {
  double readout_p10 = 0.0;  // P(read 1 | prepared 0)
  double readout_p01 = 0.0;  // P(read 0 | prepared 1)
  double single_qubit_error = 0.0;  // depolarizing probability per 1-qubit gate

  double mean_readout_error() const { return 0.5 * (readout_p10 + readout_p01); }
};

/// Per-qubit and per-pair error rates of a physical device.
class DeviceModel {
 public:
  using PairKey = std::pair<std::size_t, std::size_t>;

  DeviceModel() = default;
  explicit DeviceModel(std::vector<QubitCalibration> qubits) : qubits_(std::move(qubits)) {}

  /// Every qubit and every pair share the same rates (all-to-all coupling).
  static DeviceModel uniform(std::size_t n, double readout, double single, double two) {
    DeviceModel d(std::vector<QubitCalibration>(n, QubitCalibration{readout, readout, single}));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) d.set_pair_error(a, b, two);
    d.validate();
    return d;
  }
  static DeviceModel noiseless(std::size_t n) { return uniform(n, 0.0, 0.0, 0.0); }

  std::size_t size() const { return qubits_.size(); }
  const QubitCalibration& qubit(std::size_t q) const {
    if (q >= qubits_.size()) throw InvalidArgument("physical qubit " + std::to_string(q) + " absent from device");
    return qubits_[q];
  }
  QubitCalibration& qubit(std::size_t q) {
    if (q >= qubits_.size()) throw InvalidArgument("physical qubit " + std::to_string(q) + " absent from device");
    return qubits_[q];
  }
  const std::vector<QubitCalibration>& qubits() const { return qubits_; }
  const std::map<PairKey, double>& pair_errors() const { return pairs_; }

  static PairKey key(std::size_t a, std::size_t b) { return a < b ? PairKey{a, b} : PairKey{b, a}; }

  void set_pair_error(std::size_t a, std::size_t b, double p) {
    if (a == b) throw InvalidArgument("two-qubit error needs distinct qubits");
    pairs_[key(a, b)] = p;
  }
  bool has_pair(std::size_t a, std::size_t b) const { return pairs_.count(key(a, b)) != 0; }
  double pair_error(std::size_t a, std::size_t b) const {
    auto it = pairs_.find(key(a, b));
    if (it == pairs_.end())
      throw InvalidArgument("no two-qubit calibration for pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    return it->second;
  }

  void validate() const {
    auto check = [](double p, const std::string& what) {
      if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument(what + " = " + std::to_string(p) + " is not in [0, 1]");
    };
    for (std::size_t q = 0; q < qubits_.size(); ++q) {
      const auto& c = qubits_[q];
      const std::string tag = "qubit " + std::to_string(q) + " ";
      check(c.readout_p10, tag + "readout_p10");
      check(c.readout_p01, tag + "readout_p01");
      check(c.single_qubit_error, tag + "single_qubit_error");
    }
    for (const auto& [k, p] : pairs_) {
      if (k.second >= qubits_.size()) throw InvalidArgument("pair error references unknown qubit");
      check(p, "pair error");
    }
  }

 private:
  std::vector<QubitCalibration> qubits_;
  std::map<PairKey, double> pairs_;
};

// Calibration file schema (JSON):
//   { "format": "sizecon-calibration/1",
//     "qubits": [ {"index": 0, "readout_p10": .., "readout_p01": .., "single_qubit_error": ..}, ... ],
//     "two_qubit_errors": [ {"qubits": [0, 1], "error": ..}, ... ] }
// Qubit indices must be 0..n-1, each exactly once.
inline constexpr const char* kCalibrationFormat = "sizecon-calibration/1";

inline nlohmann::json to_json(const DeviceModel& d) {
  nlohmann::json j;
  j["format"] = kCalibrationFormat;
  j["qubits"] = nlohmann::json::array();
  for (std::size_t q = 0; q < d.size(); ++q) {
    const auto& c = d.qubits()[q];
    j["qubits"].push_back({{"index", q},
                           {"readout_p10", c.readout_p10},
                           {"readout_p01", c.readout_p01},
                           {"single_qubit_error", c.single_qubit_error}});
  }
  j["two_qubit_errors"] = nlohmann::json::array();
  for (const auto& [k, p] : d.pair_errors())
    j["two_qubit_errors"].push_back({{"qubits", {k.first, k.second}}, {"error", p}});
  return j;
}

inline DeviceModel device_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("calibration must be a JSON object");
    const auto& qs = j.at("qubits");
    std::vector<QubitCalibration> qubits(qs.size());
    std::vector<bool> seen(qs.size(), false);
    for (const auto& q : qs) {
      const auto idx = q.at("index").get<std::size_t>();
      if (idx >= qubits.size() || seen[idx])
        throw ParseError("qubit index " + std::to_string(idx) + " duplicated or out of range");
      seen[idx] = true;
      qubits[idx] = {q.at("readout_p10").get<double>(), q.at("readout_p01").get<double>(),
                     q.at("single_qubit_error").get<double>()};
    }
    DeviceModel d(std::move(qubits));
    if (j.contains("two_qubit_errors"))
      for (const auto& e : j.at("two_qubit_errors")) {
        const auto& pair = e.at("qubits");
        if (!pair.is_array() || pair.size() != 2) throw ParseError("two_qubit_errors entry needs two qubits");
        d.set_pair_error(pair[0].get<std::size_t>(), pair[1].get<std::size_t>(), e.at("error").get<double>());
      }
    d.validate();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("calibration: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("calibration: ") + e.what());
  }
}

inline DeviceModel parse_calibration(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("calibration is not valid JSON: ") + e.what());
  }
  return device_from_json(j);
}

inline DeviceModel load_calibration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open calibration file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_calibration(ss.str());
}

/// 64-bit FNV-1a over the canonical JSON text; recorded in run manifests.
inline std::uint64_t calibration_hash(const DeviceModel& d) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : to_json(d).dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Heterogeneous synthetic device: each rate is median * exp(sigma * z) with
/// z standard normal, clamped to [0, 1]. Pairs are all-to-all.
struct SyntheticCalibration {
  std::size_t n_qubits = 24;
  double readout_median = 1e-2;
  double single_qubit_median = 3e-4;
  double two_qubit_median = 3e-3;
  double log_sigma = 0.5;
  std::uint64_t seed = 0;
};

inline DeviceModel generate_calibration(const SyntheticCalibration& cfg) {
  if (cfg.log_sigma < 0) throw InvalidArgument("log_sigma must be non-negative");
  RandomStream rng(cfg.seed, 0);
  auto draw = [&](double median) { return std::clamp(median * std::exp(cfg.log_sigma * rng.normal()), 0.0, 1.0); };
  std::vector<QubitCalibration> qubits(cfg.n_qubits);
  for (auto& q : qubits) {
    q.readout_p10 = draw(cfg.readout_median);
    q.readout_p01 = draw(cfg.readout_median);
    q.single_qubit_error = draw(cfg.single_qubit_median);
  }
  DeviceModel d(std::move(qubits));
  for (std::size_t a = 0; a < cfg.n_qubits; ++a)
    for (std::size_t b = a + 1; b < cfg.n_qubits; ++b) d.set_pair_error(a, b, draw(cfg.two_qubit_median));
  d.validate();
  return d;
}

}  // namespace sizecon
