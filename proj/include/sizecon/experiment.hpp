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

// End-to-end benchmark: config -> model -> sampling plan -> noisy shots ->
// per-subsystem energies and populations -> files; and the analysis pass that
// turns a run directory into the summary table and figure data.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sizecon/analysis.hpp"
#include "sizecon/device.hpp"
#include "sizecon/errors.hpp"
#include "sizecon/fcidump.hpp"
#include "sizecon/h2_model.hpp"
#include "sizecon/sampling.hpp"
#include "sizecon/simulator.hpp"
#include "sizecon/svg.hpp"
#include "sizecon/tomography.hpp"
#include "sizecon/units.hpp"

namespace sizecon {

// ---------------------------------------------------------------- config

struct SamplingConfig {
  enum class Mode { Selective, Random };
  Mode mode = Mode::Selective;
  std::size_t sets = 3;           // k
  std::size_t repetitions = 50;   // s
  std::vector<std::size_t> random_subsystems;  // N drawn randomly even in selective mode
};

struct CalibrationConfig {
  enum class Source { Synthetic, File, Noiseless };
  Source source = Source::Synthetic;
  std::string path;
  SyntheticCalibration synthetic;
};

struct ExperimentConfig {
  std::size_t representation = 1;
  std::vector<std::size_t> subsystems;
  std::uint64_t shots = 100000;
  SamplingConfig sampling;
  double bond_length = 0.7414;
  std::string fcidump;  // optional; replaces the built-in integrals
  CalibrationConfig calibration;
  std::string output_dir;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  RankingWeights ranking;
};

namespace detail {

inline void reject_unknown(const nlohmann::json& j, const std::string& where, std::initializer_list<const char*> known) {
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* name : known) ok = ok || k == name;
    if (!ok) throw ConfigError(where + ": unknown field '" + k + "'");
  }
}

template <class T>
T field(const nlohmann::json& j, const std::string& name, const std::string& where, T fallback) {
  if (!j.contains(name)) return fallback;
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(where + name + ": wrong type");
  }
}

}  // namespace detail

/// Checks every field; errors name the offending field.
inline void validate(const ExperimentConfig& c) {
  const std::size_t w = c.representation;
  if (w != 1 && w != 2 && w != 4) throw ConfigError("representation must be 1, 2 or 4");
  if (c.subsystems.empty()) throw ConfigError("subsystems must list at least one N");
  std::set<std::size_t> seen;
  for (std::size_t n : c.subsystems) {
    if (n == 0) throw ConfigError("subsystems: N must be >= 1");
    if (n * w > kSelectivePool)
      throw ConfigError("subsystems: N = " + std::to_string(n) + " needs " + std::to_string(n * w) +
                        " qubits, more than the 16-qubit budget");
    if (!seen.insert(n).second) throw ConfigError("subsystems: N = " + std::to_string(n) + " listed twice");
  }
  if (c.shots == 0) throw ConfigError("shots must be >= 1");
  if (c.sampling.sets == 0) throw ConfigError("sampling.sets must be >= 1");
  if (c.sampling.repetitions == 0) throw ConfigError("sampling.repetitions must be >= 1");
  if (!(c.bond_length > 0.0) || !std::isfinite(c.bond_length)) throw ConfigError("bond_length must be positive");
  if (c.output_dir.empty()) throw ConfigError("output_dir is required");
  if (c.calibration.source == CalibrationConfig::Source::File && c.calibration.path.empty())
    throw ConfigError("calibration.path is required for source 'file'");
  if (c.calibration.synthetic.n_qubits < kSelectivePool)
    throw ConfigError("calibration.n_qubits must be >= 16");
  if (c.calibration.synthetic.log_sigma < 0) throw ConfigError("calibration.log_sigma must be >= 0");
  for (double m : {c.calibration.synthetic.readout_median, c.calibration.synthetic.single_qubit_median,
                   c.calibration.synthetic.two_qubit_median})
    if (!(m >= 0.0 && m <= 1.0)) throw ConfigError("calibration medians must lie in [0, 1]");
  if (c.ranking.readout < 0 || c.ranking.two_qubit < 0) throw ConfigError("ranking weights must be >= 0");
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  detail::reject_unknown(j, "config", {"representation", "subsystems", "shots", "sampling", "bond_length", "fcidump",
                                       "calibration", "output_dir", "seed", "threads", "ranking"});
  ExperimentConfig c;
  c.representation = detail::field<std::size_t>(j, "representation", "", 1);
  c.subsystems = detail::field<std::vector<std::size_t>>(j, "subsystems", "", {});
  c.shots = detail::field<std::uint64_t>(j, "shots", "", 100000);
  c.bond_length = detail::field<double>(j, "bond_length", "", 0.7414);
  c.fcidump = detail::field<std::string>(j, "fcidump", "", "");
  c.output_dir = detail::field<std::string>(j, "output_dir", "", "");
  c.seed = detail::field<std::uint64_t>(j, "seed", "", 0);
  c.threads = detail::field<unsigned>(j, "threads", "", 0);

  if (j.contains("sampling")) {
    const auto& s = j.at("sampling");
    if (!s.is_object()) throw ConfigError("sampling must be an object");
    detail::reject_unknown(s, "sampling", {"mode", "sets", "repetitions", "random_subsystems"});
    const auto mode = detail::field<std::string>(s, "mode", "sampling.", "selective");
    if (mode == "selective") c.sampling.mode = SamplingConfig::Mode::Selective;
    else if (mode == "random") c.sampling.mode = SamplingConfig::Mode::Random;
    else throw ConfigError("sampling.mode must be 'selective' or 'random', got '" + mode + "'");
    c.sampling.sets = detail::field<std::size_t>(s, "sets", "sampling.", 3);
    c.sampling.repetitions = detail::field<std::size_t>(s, "repetitions", "sampling.", 50);
    c.sampling.random_subsystems = detail::field<std::vector<std::size_t>>(s, "random_subsystems", "sampling.", {});
  }
  if (j.contains("calibration")) {
    const auto& s = j.at("calibration");
    if (!s.is_object()) throw ConfigError("calibration must be an object");
    detail::reject_unknown(s, "calibration", {"source", "path", "seed", "n_qubits", "readout_median",
                                              "single_qubit_median", "two_qubit_median", "log_sigma"});
    const auto src = detail::field<std::string>(s, "source", "calibration.", "synthetic");
    if (src == "synthetic") c.calibration.source = CalibrationConfig::Source::Synthetic;
    else if (src == "file") c.calibration.source = CalibrationConfig::Source::File;
    else if (src == "noiseless") c.calibration.source = CalibrationConfig::Source::Noiseless;
    else throw ConfigError("calibration.source must be 'synthetic', 'file' or 'noiseless', got '" + src + "'");
    auto& syn = c.calibration.synthetic;
    c.calibration.path = detail::field<std::string>(s, "path", "calibration.", "");
    syn.seed = detail::field<std::uint64_t>(s, "seed", "calibration.", 0);
    syn.n_qubits = detail::field<std::size_t>(s, "n_qubits", "calibration.", syn.n_qubits);
    syn.readout_median = detail::field<double>(s, "readout_median", "calibration.", syn.readout_median);
    syn.single_qubit_median = detail::field<double>(s, "single_qubit_median", "calibration.", syn.single_qubit_median);
    syn.two_qubit_median = detail::field<double>(s, "two_qubit_median", "calibration.", syn.two_qubit_median);
    syn.log_sigma = detail::field<double>(s, "log_sigma", "calibration.", syn.log_sigma);
  }
  if (j.contains("ranking")) {
    const auto& s = j.at("ranking");
    detail::reject_unknown(s, "ranking", {"readout", "two_qubit"});
    c.ranking.readout = detail::field<double>(s, "readout", "ranking.", 1.0);
    c.ranking.two_qubit = detail::field<double>(s, "two_qubit", "ranking.", 1.0);
  }
  validate(c);
  return c;
}

inline nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["representation"] = c.representation;
  j["subsystems"] = c.subsystems;
  j["shots"] = c.shots;
  j["sampling"] = {{"mode", c.sampling.mode == SamplingConfig::Mode::Selective ? "selective" : "random"},
                   {"sets", c.sampling.sets},
                   {"repetitions", c.sampling.repetitions},
                   {"random_subsystems", c.sampling.random_subsystems}};
  j["bond_length"] = c.bond_length;
  if (!c.fcidump.empty()) j["fcidump"] = c.fcidump;
  const char* src[] = {"synthetic", "file", "noiseless"};
  const auto& syn = c.calibration.synthetic;
  j["calibration"] = {{"source", src[static_cast<int>(c.calibration.source)]},
                      {"seed", syn.seed},
                      {"n_qubits", syn.n_qubits},
                      {"readout_median", syn.readout_median},
                      {"single_qubit_median", syn.single_qubit_median},
                      {"two_qubit_median", syn.two_qubit_median},
                      {"log_sigma", syn.log_sigma}};
  if (!c.calibration.path.empty()) j["calibration"]["path"] = c.calibration.path;
  j["output_dir"] = c.output_dir;
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  j["ranking"] = {{"readout", c.ranking.readout}, {"two_qubit", c.ranking.two_qubit}};
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

inline ExperimentConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

inline ExperimentConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

inline DeviceModel resolve_calibration(const ExperimentConfig& c) {
  switch (c.calibration.source) {
    case CalibrationConfig::Source::File: return load_calibration(c.calibration.path);
    case CalibrationConfig::Source::Noiseless: return DeviceModel::noiseless(c.calibration.synthetic.n_qubits);
    default: return generate_calibration(c.calibration.synthetic);
  }
}

inline H2Model resolve_model(const ExperimentConfig& c) {
  if (c.fcidump.empty()) return build_h2_model(c.bond_length);
  return h2_model_from_fermion(parse_fcidump(read_file(c.fcidump)));
}

// ---------------------------------------------------------------- run

/// One sample: N subsystems on one set of physical blocks.
struct SampleResult {
  std::size_t n = 0;
  std::size_t entry = 0;
  std::size_t set = 0;
  std::size_t sample = 0;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<double> energies;   // hartree, per subsystem
  std::vector<double> variances;  // shot-noise variance, hartree^2
  PopulationBreakdown populations;

  double energy_per_h2() const { return sample_mean(energies); }
  /// Shot-noise variance of energy_per_h2 (subsystem estimates treated as independent).
  double variance_per_h2() const {
    double v = 0;
    for (double x : variances) v += x;
    return v / static_cast<double>(energies.size() * energies.size());
  }
  SubsystemPopulation mean_population() const {
    SubsystemPopulation m;
    for (const auto& p : populations) {
      m.hf += p.hf;
      m.single_excitation += p.single_excitation;
      m.double_excitation += p.double_excitation;
      m.number_violating += p.number_violating;
    }
    const double k = static_cast<double>(populations.size());
    m.hf /= k, m.single_excitation /= k, m.double_excitation /= k, m.number_violating /= k;
    return m;
  }
};

struct SeedRecord {
  std::size_t n, entry, group;
  std::string basis;
  std::uint64_t seed;
};

struct RunResult {
  ExperimentConfig config;
  H2Model model;
  DeviceModel device;
  std::uint64_t calibration_hash = 0;
  std::vector<std::size_t> ranking;
  std::map<std::size_t, SamplingPlan> plans;
  std::map<std::size_t, std::size_t> group_counts;
  std::vector<SampleResult> samples;
  std::vector<SeedRecord> seeds;
};

inline SamplingPlan plan_for(const ExperimentConfig& c, std::span<const std::size_t> ranking, std::size_t n) {
  const auto pool = ranking.first(std::min<std::size_t>(kSelectivePool, ranking.size()));
  const bool random = c.sampling.mode == SamplingConfig::Mode::Random ||
                      std::find(c.sampling.random_subsystems.begin(), c.sampling.random_subsystems.end(), n) !=
                          c.sampling.random_subsystems.end();
  if (random) return random_plan(pool, n, c.representation, c.sampling.repetitions, derive_seed(c.seed, {n, 0xB10C}));
  if (kSelectivePool % (n * c.representation) != 0)
    throw ConfigError("N = " + std::to_string(n) + " does not divide the 16-qubit pool for selective sampling; " +
                      "list it in sampling.random_subsystems");
  return selective_plan(pool, n, c.representation, c.sampling.sets);
}

/// Runs every (N, sample, group) job in memory. Job seeds are
/// derive_seed(master, {N, entry, group}).
inline RunResult execute(const ExperimentConfig& cfg, const DeviceModel& device, const H2Model& model) {
  validate(cfg);
  device.validate();
  if (device.size() < kSelectivePool)
    throw ConfigError("device has " + std::to_string(device.size()) + " qubits; at least 16 are required");
  RunResult r;
  r.config = cfg;
  r.model = model;
  r.device = device;
  r.calibration_hash = calibration_hash(device);
  r.ranking = rank_qubits(device, cfg.ranking);
  const std::size_t w = cfg.representation;
  const Circuit sub = model.circuit(w);
  const PauliSum& h_sub = model.hamiltonian(w);
  ShotOptions opts{cfg.threads};

  for (std::size_t n : cfg.subsystems) {
    const SamplingPlan plan = plan_for(cfg, r.ranking, n);
    const MeasurementPlan mplan = build_plan(h_sub, n);
    const Circuit circuit = compose(sub, n, contiguous_blocks(n, w));
    const std::size_t zg = mplan.computational_group();
    r.group_counts[n] = mplan.groups.size();
    for (std::size_t e = 0; e < plan.entries.size(); ++e) {
      const auto& entry = plan.entries[e];
      std::vector<std::size_t> physical;
      for (const auto& b : entry.blocks) physical.insert(physical.end(), b.begin(), b.end());
      std::vector<CountsTable> counts;
      for (std::size_t g = 0; g < mplan.groups.size(); ++g) {
        const std::uint64_t seed = derive_seed(cfg.seed, {n, e, g});
        r.seeds.push_back({n, e, g, mplan.groups[g].basis, seed});
        counts.push_back(
            run_shots(circuit, device, physical, mplan.groups[g].basis_change, cfg.shots, seed, mplan.groups[g].basis, opts));
      }
      SampleResult s;
      s.n = n;
      s.entry = e;
      s.set = entry.set;
      s.sample = entry.sample;
      s.blocks = entry.blocks;
      s.energies = estimate_energies(mplan, counts);
      s.variances = estimate_energy_variances(mplan, counts);
      s.populations = extract_populations(counts[zg], w, n);
      r.samples.push_back(std::move(s));
    }
    r.plans.emplace(n, plan);
  }
  return r;
}

namespace detail {

inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline std::string join_qubits(const std::vector<std::size_t>& q) {
  std::string s;
  for (std::size_t k = 0; k < q.size(); ++k) s += (k ? " " : "") + std::to_string(q[k]);
  return s;
}

}  // namespace detail

inline constexpr const char* kRawHeader =
    "representation,N,entry,set,sample,subsystem,physical_qubits,energy_hartree,energy_kcal,"
    "shot_variance_hartree2,hf,single,double,number_violating";
inline constexpr const char* kPopulationsHeader =
    "representation,N,entry,set,sample,energy_per_h2_hartree,shot_variance_per_h2_hartree2,hf,single,double,"
    "number_violating";

inline std::string raw_csv(const RunResult& r) {
  std::string out = std::string(kRawHeader) + "\n";
  const std::string rep = std::to_string(r.config.representation);
  for (const auto& s : r.samples)
    for (std::size_t k = 0; k < s.energies.size(); ++k) {
      const auto& p = s.populations[k];
      out += rep + "," + std::to_string(s.n) + "," + std::to_string(s.entry) + "," + std::to_string(s.set) + "," +
             std::to_string(s.sample) + "," + std::to_string(k) + "," + detail::join_qubits(s.blocks[k]) + "," +
             detail::g17(s.energies[k]) + "," + detail::g17(units::to_kcal(s.energies[k])) + "," +
             detail::g17(s.variances[k]) + "," + detail::g17(p.hf) + "," + detail::g17(p.single_excitation) + "," +
             detail::g17(p.double_excitation) + "," + detail::g17(p.number_violating) + "\n";
    }
  return out;
}

inline std::string populations_csv(const RunResult& r) {
  std::string out = std::string(kPopulationsHeader) + "\n";
  const std::string rep = std::to_string(r.config.representation);
  for (const auto& s : r.samples) {
    const auto p = s.mean_population();
    out += rep + "," + std::to_string(s.n) + "," + std::to_string(s.entry) + "," + std::to_string(s.set) + "," +
           std::to_string(s.sample) + "," + detail::g17(s.energy_per_h2()) + "," + detail::g17(s.variance_per_h2()) +
           "," + detail::g17(p.hf) + "," + detail::g17(p.single_excitation) + "," + detail::g17(p.double_excitation) +
           "," + detail::g17(p.number_violating) + "\n";
  }
  return out;
}

inline nlohmann::json manifest(const RunResult& r) {
  nlohmann::json j;
  j["format"] = "sizecon-run/1";
  j["config"] = to_json(r.config);
  j["master_seed"] = r.config.seed;
  j["calibration_hash"] = detail::hex64(r.calibration_hash);
  j["calibration_file"] = "calibration.json";
  j["e_hf"] = r.model.e_hf;
  j["e_fci"] = r.model.e_fci;
  j["two_level"] = {{"g0", r.model.two_level.g0}, {"g1", r.model.two_level.g1}, {"g2", r.model.two_level.g2}};
  j["ranking"] = r.ranking;
  nlohmann::json groups = nlohmann::json::object();
  for (const auto& [n, g] : r.group_counts) groups[std::to_string(n)] = g;
  j["groups_per_n"] = groups;
  j["seeds"] = nlohmann::json::array();
  for (const auto& s : r.seeds)
    j["seeds"].push_back(
        {{"N", s.n}, {"entry", s.entry}, {"group", s.group}, {"basis", s.basis}, {"seed", detail::hex64(s.seed)}});
  return j;
}

inline void write_run(const RunResult& r, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
  write_file(dir / "raw.csv", raw_csv(r));
  write_file(dir / "populations.csv", populations_csv(r));
  write_file(dir / "manifest.json", manifest(r).dump(2) + "\n");
  write_file(dir / "calibration.json", to_json(r.device).dump(2) + "\n");
  std::string plans = "N," + std::string("set,sample,subsystem,qubits\n");
  for (const auto& [n, p] : r.plans) {
    const std::string csv = p.to_csv();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) plans += std::to_string(n) + "," + line + "\n";
  }
  write_file(dir / "plan.csv", plans);
  write_file(dir / "circuit.txt", r.model.circuit(r.config.representation).str());
}

inline RunResult run_experiment(const ExperimentConfig& cfg) {
  RunResult r = execute(cfg, resolve_calibration(cfg), resolve_model(cfg));
  write_run(r, cfg.output_dir);
  return r;
}

// ---------------------------------------------------------------- analysis

/// What the analysis pass needs; reconstructible from a run directory alone.
struct RunData {
  std::size_t representation = 1;
  std::uint64_t shots = 0;
  double e_hf = 0.0;
  double e_fci = 0.0;
  TwoLevelParams two_level;
  struct Sample {
    std::size_t n = 0;
    double energy_per_h2 = 0.0;
    double variance_per_h2 = 0.0;
    SubsystemPopulation population;
  };
  std::vector<Sample> samples;
};

inline RunData run_data(const RunResult& r) {
  RunData d;
  d.representation = r.config.representation;
  d.shots = r.config.shots;
  d.e_hf = r.model.e_hf;
  d.e_fci = r.model.e_fci;
  d.two_level = r.model.two_level;
  for (const auto& s : r.samples) d.samples.push_back({s.n, s.energy_per_h2(), s.variance_per_h2(), s.mean_population()});
  return d;
}

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline double to_double(const std::string& s, std::size_t line, const std::string& file) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, file + ": not a number: '" + s + "'");
  }
}

}  // namespace detail

inline RunData load_run(const std::filesystem::path& dir) {
  const auto mpath = dir / "manifest.json";
  if (!std::filesystem::exists(mpath)) throw IoError("missing " + mpath.string());
  nlohmann::json m;
  try {
    m = nlohmann::json::parse(read_file(mpath.string()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest.json: ") + e.what());
  }
  RunData d;
  try {
    d.representation = m.at("config").at("representation").get<std::size_t>();
    d.shots = m.at("config").at("shots").get<std::uint64_t>();
    d.e_hf = m.at("e_hf").get<double>();
    d.e_fci = m.at("e_fci").get<double>();
    const auto& t = m.at("two_level");
    d.two_level = {t.at("g0").get<double>(), t.at("g1").get<double>(), t.at("g2").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest.json: ") + e.what());
  }

  const auto ppath = dir / "populations.csv";
  if (!std::filesystem::exists(ppath)) throw IoError("missing " + ppath.string());
  std::istringstream in(read_file(ppath.string()));
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line) || line != kPopulationsHeader)
    throw ParseError(1, "populations.csv: unexpected header");
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = detail::split_csv(line);
    if (f.size() != 11) throw ParseError(lineno, "populations.csv: expected 11 fields, got " + std::to_string(f.size()));
    RunData::Sample s;
    const double n = detail::to_double(f[1], lineno, "populations.csv");
    if (!(n >= 1) || n != std::floor(n)) throw ParseError(lineno, "populations.csv: bad N");
    s.n = static_cast<std::size_t>(n);
    s.energy_per_h2 = detail::to_double(f[5], lineno, "populations.csv");
    s.variance_per_h2 = detail::to_double(f[6], lineno, "populations.csv");
    s.population.hf = detail::to_double(f[7], lineno, "populations.csv");
    s.population.single_excitation = detail::to_double(f[8], lineno, "populations.csv");
    s.population.double_excitation = detail::to_double(f[9], lineno, "populations.csv");
    s.population.number_violating = detail::to_double(f[10], lineno, "populations.csv");
    d.samples.push_back(s);
  }
  if (d.samples.empty()) throw ParseError("populations.csv has no samples");
  return d;
}

struct NSummary {
  std::size_t n = 0;
  std::size_t samples = 0;
  double mean_energy_kcal = 0.0;
  double stddev_kcal = 0.0;
  double shot_noise_kcal = 0.0;
  double mean_double = 0.0;
  double double_stderr = 0.0;
  double mean_single = 0.0;
  double single_stderr = 0.0;
  double mean_violating = 0.0;
};

struct AnalysisResult {
  std::size_t representation = 1;
  std::optional<RegressionResult> regression;  // needs two distinct N
  Horizon horizon_estimate;
  std::vector<NSummary> per_n;
  ErrorStats errors;
  std::vector<CisdPoint> cisd;
  FciTwoLevel fci;
  double e_hf = 0.0, e_fci = 0.0;
};

namespace detail {
/// Standard error of a population mean: the larger of the spread across
/// samples and the binomial floor over every measured block.
inline double population_stderr(std::span<const double> v, double pooled, double blocks) {
  const double spread = v.size() > 1 ? sample_stddev(v) / std::sqrt(static_cast<double>(v.size())) : 0.0;
  const double binom = std::sqrt(std::max(pooled * (1 - pooled), 0.0) / blocks);
  return std::max(spread, binom);
}
}  // namespace detail

inline AnalysisResult analyze_data(const RunData& d) {
  AnalysisResult a;
  a.representation = d.representation;
  a.e_hf = d.e_hf;
  a.e_fci = d.e_fci;
  std::map<std::size_t, std::vector<const RunData::Sample*>> by_n;
  for (const auto& s : d.samples) by_n[s.n].push_back(&s);

  std::map<std::size_t, SizeSeries> series;
  std::map<std::size_t, std::vector<double>> energies;
  std::size_t n_max = 1;
  for (const auto& [n, ss] : by_n) {
    n_max = std::max(n_max, n);
    NSummary x;
    x.n = n;
    x.samples = ss.size();
    std::vector<double> e, dbl, sgl;
    double var = 0, viol = 0;
    for (const auto* s : ss) {
      e.push_back(units::to_kcal(s->energy_per_h2));
      energies[n].push_back(s->energy_per_h2);
      dbl.push_back(s->population.double_excitation);
      sgl.push_back(s->population.single_excitation);
      var += s->variance_per_h2;
      viol += s->population.number_violating;
    }
    x.mean_energy_kcal = sample_mean(e);
    x.stddev_kcal = sample_stddev(e);
    x.shot_noise_kcal = units::to_kcal(std::sqrt(var / static_cast<double>(ss.size())));
    x.mean_double = sample_mean(dbl);
    x.mean_single = sample_mean(sgl);
    x.mean_violating = viol / static_cast<double>(ss.size());
    const double blocks = static_cast<double>(d.shots) * static_cast<double>(n) * static_cast<double>(ss.size());
    x.double_stderr = detail::population_stderr(dbl, x.mean_double, blocks);
    x.single_stderr = detail::population_stderr(sgl, x.mean_single, blocks);
    series[n] = {e, x.shot_noise_kcal};
    a.per_n.push_back(x);
  }
  if (series.size() >= 2) {
    a.regression = fit_size_consistency(series, d.representation);
    a.horizon_estimate = horizon(a.regression->slope_delta, d.representation);
  }
  a.errors = error_stats(energies, d.e_fci, d.e_hf);
  a.cisd = cisd_reference(d.two_level, std::max<std::size_t>(n_max, 16));
  a.fci = fci_two_level(d.two_level);
  return a;
}

inline constexpr const char* kSummaryHeader =
    "representation,delta_kcal_per_qubit,slope_stderr,intercept_kcal,n_qubit,n_h2";

inline std::string summary_csv(const AnalysisResult& a) {
  std::string out = std::string(kSummaryHeader) + "\n" + std::to_string(a.representation) + ",";
  if (!a.regression) return out + "nan,nan,nan,nan,nan\n";
  const auto& r = *a.regression;
  out += detail::g17(r.slope_delta) + "," + detail::g17(r.slope_stderr) + "," + detail::g17(r.intercept) + ",";
  if (a.horizon_estimate.unbounded) return out + "unbounded,unbounded\n";
  return out + std::to_string(a.horizon_estimate.n_qubit) + "," + std::to_string(a.horizon_estimate.n_h2) + "\n";
}

/// Classical references for N = 1..n_max non-interacting H2 (hartree unless noted).
inline std::string reference_csv(const TwoLevelParams& h, double e_hf, double e_fci, std::size_t n_max) {
  const auto fci = fci_two_level(h);
  std::string out =
      "N,hf_energy,fci_energy,cisd_energy,fci_correlation_per_h2,cisd_correlation_per_h2,fci_double_per_h2,"
      "cisd_double_per_h2\n";
  for (const auto& p : cisd_reference(h, n_max)) {
    const double nn = static_cast<double>(p.n);
    out += std::to_string(p.n) + "," + detail::g17(nn * e_hf) + "," + detail::g17(nn * e_fci) + "," +
           detail::g17(p.energy) + "," + detail::g17(e_fci - e_hf) + "," + detail::g17(p.correlation_per_h2) + "," +
           detail::g17(fci.double_population) + "," + detail::g17(p.double_population_per_h2) + "\n";
  }
  return out;
}

struct FigureFiles {
  std::map<std::string, std::string> files;  // name -> content
};

inline FigureFiles figures(const AnalysisResult& a, const RunData& d) {
  FigureFiles out;
  const double q = static_cast<double>(a.representation);
  const double fci_kcal = units::to_kcal(a.e_fci), hf_kcal = units::to_kcal(a.e_hf);

  // fig1: energy per H2 vs N
  std::string f1 = "N,total_qubits,samples,mean_energy_per_h2_kcal,stddev_kcal,shot_noise_kcal,wls_kcal,fci_kcal\n";
  svg::Series pts{"samples", {}, svg::Style::Markers, "#ff7f0e"};
  svg::Series means{"mean", {}, svg::Style::Markers, "#1f77b4"};
  svg::Series wls{"WLS", {}, svg::Style::Dashed, "#7f7f7f"};
  svg::Series fci{"FCI", {}, svg::Style::Line, "#2ca02c"};
  for (const auto& s : d.samples) pts.points.emplace_back(static_cast<double>(s.n), units::to_kcal(s.energy_per_h2));
  for (const auto& x : a.per_n) {
    const double nn = static_cast<double>(x.n);
    const double fit = a.regression ? a.regression->intercept + a.regression->slope_delta * nn * q : std::nan("");
    f1 += std::to_string(x.n) + "," + std::to_string(x.n * a.representation) + "," + std::to_string(x.samples) + "," +
          detail::g17(x.mean_energy_kcal) + "," + detail::g17(x.stddev_kcal) + "," + detail::g17(x.shot_noise_kcal) +
          "," + detail::g17(fit) + "," + detail::g17(fci_kcal) + "\n";
    means.points.emplace_back(nn, x.mean_energy_kcal);
    wls.points.emplace_back(nn, fit);
    fci.points.emplace_back(nn, fci_kcal);
  }
  out.files["fig1.csv"] = f1;
  out.files["fig1.svg"] = svg::render({"Energy per H2 vs N (" + std::to_string(a.representation) + "-qubit rep)",
                                       "N (subsystems)", "energy per H2 (kcal/mol)", {pts, means, wls, fci}});

  // fig2a / fig2b: populations with FCI and CISD curves
  std::string f2a = "N,double_per_h2,stderr,fci_double_per_h2,cisd_double_per_h2\n";
  std::string f2b = "N,single_per_h2,stderr,number_violating_per_h2,fci_single_per_h2,cisd_single_per_h2\n";
  svg::Series m2a{"measured", {}, svg::Style::Markers, "#1f77b4"}, fci2a{"FCI", {}, svg::Style::Line, "#2ca02c"},
      cisd2a{"CISD", {}, svg::Style::Dashed, "#d62728"};
  svg::Series m2b{"single", {}, svg::Style::Markers, "#1f77b4"}, v2b{"number violating", {}, svg::Style::Markers, "#9467bd"},
      ref2b{"FCI / CISD", {}, svg::Style::Line, "#2ca02c"};
  for (const auto& x : a.per_n) {
    const double nn = static_cast<double>(x.n);
    const double cisd = a.cisd[x.n - 1].double_population_per_h2;
    f2a += std::to_string(x.n) + "," + detail::g17(x.mean_double) + "," + detail::g17(x.double_stderr) + "," +
           detail::g17(a.fci.double_population) + "," + detail::g17(cisd) + "\n";
    f2b += std::to_string(x.n) + "," + detail::g17(x.mean_single) + "," + detail::g17(x.single_stderr) + "," +
           detail::g17(x.mean_violating) + ",0,0\n";
    m2a.points.emplace_back(nn, x.mean_double);
    m2b.points.emplace_back(nn, x.mean_single);
    v2b.points.emplace_back(nn, x.mean_violating);
    ref2b.points.emplace_back(nn, 0.0);
  }
  for (const auto& c : a.cisd) {
    fci2a.points.emplace_back(static_cast<double>(c.n), a.fci.double_population);
    cisd2a.points.emplace_back(static_cast<double>(c.n), c.double_population_per_h2);
  }
  out.files["fig2a.csv"] = f2a;
  out.files["fig2a.svg"] = svg::render({"Double-excitation population per H2", "N (subsystems)", "population",
                                        {m2a, fci2a, cisd2a}});
  out.files["fig2b.csv"] = f2b;
  out.files["fig2b.svg"] = svg::render({"Single-excitation population per H2", "N (subsystems)", "population",
                                        {m2b, v2b, ref2b}});

  // fig3: error vs N
  std::string f3 = "N,samples,mean_error_kcal,stddev_kcal,hf_error_kcal,fci_error_kcal\n";
  svg::Series m3{"mean error", {}, svg::Style::LineMarkers, "#1f77b4"}, hf3{"HF", {}, svg::Style::Dashed, "#d62728"},
      fci3{"FCI", {}, svg::Style::Line, "#2ca02c"};
  for (const auto& p : a.errors.points) {
    const double nn = static_cast<double>(p.n);
    f3 += std::to_string(p.n) + "," + std::to_string(p.samples) + "," + detail::g17(p.mean_error_kcal) + "," +
          detail::g17(p.stddev_kcal) + "," + detail::g17(a.errors.hartree_fock_kcal) + ",0\n";
    m3.points.emplace_back(nn, p.mean_error_kcal);
    hf3.points.emplace_back(nn, a.errors.hartree_fock_kcal);
    fci3.points.emplace_back(nn, 0.0);
  }
  out.files["fig3.csv"] = f3;
  out.files["fig3.svg"] =
      svg::render({"Energy error per H2 vs N", "N (subsystems)", "error vs FCI (kcal/mol)", {m3, hf3, fci3}});

  out.files["summary.csv"] = summary_csv(a);
  out.files["reference.csv"] = reference_csv(d.two_level, d.e_hf, d.e_fci, a.cisd.size());
  (void)hf_kcal;
  return out;
}

inline AnalysisResult analyze(const std::filesystem::path& dir) {
  const RunData d = load_run(dir);
  AnalysisResult a = analyze_data(d);
  for (const auto& [name, text] : figures(a, d).files) write_file(dir / name, text);
  return a;
}

}  // namespace sizecon
