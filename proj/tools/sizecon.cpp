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


// sizecon: command-line driver for the size-consistency benchmark.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sizecon/experiment.hpp"

namespace {

using namespace sizecon;

void print_summary(const AnalysisResult& a) {
  std::printf("representation %zu-qubit\n", a.representation);
  std::printf("%4s %8s %16s %12s %12s %12s\n", "N", "samples", "E/H2 (kcal/mol)", "stddev", "double", "single");
  for (const auto& x : a.per_n)
    std::printf("%4zu %8zu %16.4f %12.4f %12.6f %12.6f\n", x.n, x.samples, x.mean_energy_kcal, x.stddev_kcal,
                x.mean_double, x.mean_single);
  if (!a.regression) {
    std::printf("delta: needs at least two distinct N\n");
    return;
  }
  std::printf("delta = %.6e +/- %.3e kcal/mol per qubit\n", a.regression->slope_delta, a.regression->slope_stderr);
  if (a.horizon_estimate.unbounded)
    std::printf("horizon: unbounded\n");
  else
    std::printf("horizon: %lld qubits, %lld H2\n", static_cast<long long>(a.horizon_estimate.n_qubit),
                static_cast<long long>(a.horizon_estimate.n_h2));
}

int run_cmd(const std::string& config_path, const std::string& out_override, int threads, bool then_analyze) {
  ExperimentConfig cfg = load_config(config_path);
  if (!out_override.empty()) cfg.output_dir = out_override;
  if (threads >= 0) cfg.threads = static_cast<unsigned>(threads);
  const RunResult r = run_experiment(cfg);
  std::printf("wrote %zu samples to %s (e_fci = %.10f hartree)\n", r.samples.size(), cfg.output_dir.c_str(),
              r.model.e_fci);
  if (then_analyze) print_summary(analyze(cfg.output_dir));
  return 0;
}

int reference_cmd(std::size_t n_max, double bond, const std::string& fcidump) {
  if (n_max == 0) throw InvalidArgument("--n-max must be >= 1");
  const H2Model m = fcidump.empty() ? build_h2_model(bond) : h2_model_from_fermion(parse_fcidump(read_file(fcidump)));
  std::fputs(reference_csv(m.two_level, m.e_hf, m.e_fci, n_max).c_str(), stdout);
  return 0;
}

int generate_cmd(const SyntheticCalibration& syn, const std::string& out) {
  const std::string text = to_json(generate_calibration(syn)).dump(2) + "\n";
  if (out.empty() || out == "-")
    std::fputs(text.c_str(), stdout);
  else
    write_file(out, text);
  return 0;
}

int rank_cmd(const std::string& path, const RankingWeights& w) {
  const DeviceModel d = load_calibration(path);
  const auto scores = qubit_scores(d, w);
  std::printf("rank,qubit,score,readout_p01,readout_p10,single_qubit_error\n");
  const auto order = rank_qubits(d, w);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& q = d.qubit(order[i]);
    std::printf("%zu,%zu,%.6g,%.6g,%.6g,%.6g\n", i, order[i], scores[order[i]], q.readout_p01, q.readout_p10,
                q.single_qubit_error);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Size-consistency benchmark for noisy quantum devices"};
  app.require_subcommand(1);

  std::string config_path, out_override;
  int threads = -1;
  bool then_analyze = false;
  auto* run = app.add_subcommand("run", "Run an experiment described by a JSON config");
  run->add_option("config", config_path, "config file")->required();
  run->add_option("-o,--output-dir", out_override, "override output_dir");
  run->add_option("-j,--threads", threads, "worker threads (0 = hardware)");
  run->add_flag("--analyze", then_analyze, "analyze the run directory afterwards");

  std::string run_dir;
  auto* an = app.add_subcommand("analyze", "Write summary, figure CSVs and SVGs for a run directory");
  an->add_option("dir", run_dir, "run directory")->required();

  std::size_t n_max = 16;
  double bond = 0.7414;
  std::string fcidump;
  auto* ref = app.add_subcommand("reference", "Print HF, FCI and CISD references for N = 1..n-max");
  ref->add_option("--n-max", n_max, "largest N")->required();
  ref->add_option("--bond-length", bond, "H-H distance in angstrom");
  ref->add_option("--fcidump", fcidump, "read integrals from an FCIDUMP file");

  auto* cal = app.add_subcommand("calibration", "Synthetic calibrations and qubit ranking");
  cal->require_subcommand(1);
  SyntheticCalibration syn;
  std::string cal_out;
  auto* gen = cal->add_subcommand("generate", "Generate a heterogeneous synthetic calibration");
  gen->add_option("--seed", syn.seed, "generator seed")->required();
  gen->add_option("--n-qubits", syn.n_qubits, "device size");
  gen->add_option("--readout-median", syn.readout_median, "median readout flip probability");
  gen->add_option("--single-qubit-median", syn.single_qubit_median, "median single-qubit depolarizing probability");
  gen->add_option("--two-qubit-median", syn.two_qubit_median, "median two-qubit depolarizing probability");
  gen->add_option("--log-sigma", syn.log_sigma, "log-normal spread");
  gen->add_option("-o,--output", cal_out, "output file (default stdout)");
  std::string cal_path;
  RankingWeights weights;
  auto* rank = cal->add_subcommand("rank", "Rank qubits of a calibration file, best first");
  rank->add_option("file", cal_path, "calibration JSON")->required();
  rank->add_option("--readout-weight", weights.readout, "weight of readout error");
  rank->add_option("--two-qubit-weight", weights.two_qubit, "weight of two-qubit error");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_cmd(config_path, out_override, threads, then_analyze);
    if (*an) {
      print_summary(analyze(run_dir));
      return 0;
    }
    if (*ref) return reference_cmd(n_max, bond, fcidump);
    if (*gen) return generate_cmd(syn, cal_out);
    if (*rank) return rank_cmd(cal_path, weights);
  } catch (const sizecon::Error& e) {
    std::fprintf(stderr, "error[%s]: %s\n", e.category().c_str(), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error[internal]: %s\n", e.what());
    return 1;
  }
  return 1;
}
