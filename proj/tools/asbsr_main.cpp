// Copyright 2026 The ASBSR Authors. All Rights Reserved.
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

// asbsr: sparse image sampling at rates near the spectrum-support area and
// bounded-spectrum reconstruction, plus a small sparse-recovery lab.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "asbsr/config.hpp"
#include "asbsr/cs_lab.hpp"
#include "asbsr/dct.hpp"
#include "asbsr/errors.hpp"
#include "asbsr/image_io.hpp"
#include "asbsr/lattices.hpp"
#include "asbsr/pipeline.hpp"
#include "asbsr/spectral.hpp"
#include "asbsr/text_io.hpp"
#include "json.hpp"

namespace {

using asbsr::format_real;
using nlohmann::json;

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string out_path(const std::string& dir, const char* name) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

// msed: image -> minimal spectrum support for an error budget, plus its
// sparsity.
int cmd_msed(const std::string& input, std::optional<double> target_rmse,
             std::optional<double> target_mse, const std::string& out_mask,
             const std::string& out_json) {
  if (target_rmse.has_value() == target_mse.has_value()) {
    throw std::invalid_argument("give exactly one of --target-rmse / --target-mse");
  }
  const asbsr::Image img = asbsr::read_image(input);
  const asbsr::Spectrum2D spectrum = asbsr::dct2_forward(img);
  const asbsr::ErrorTarget target = target_rmse
                                        ? asbsr::ErrorTarget::from_rmse(*target_rmse)
                                        : asbsr::ErrorTarget::from_mse(*target_mse);
  const asbsr::SpectrumMask mask = asbsr::msed_zone(spectrum, target);
  const asbsr::BsApproximation bs = asbsr::truncate_spectrum(spectrum, mask);

  if (!out_mask.empty()) asbsr::write_mask_pgm(mask, out_mask);

  json j;
  j["cells"] = mask.count();
  j["sparsity"] = asbsr::sparsity(mask);
  j["target_mse"] = target.mse();
  j["achieved_mse"] = bs.mse;
  j["achieved_rmse"] = std::sqrt(bs.mse);
  j["ny"] = img.ny;
  j["nx"] = img.nx;
  if (!out_json.empty()) write_text_file(out_json, j.dump(2) + "\n");
  std::cout << "sparsity " << format_real(asbsr::sparsity(mask)) << " cells " << mask.count()
            << " achieved_rmse " << format_real(std::sqrt(bs.mse)) << "\n";
  return 0;
}

int cmd_sample(const std::string& input, const std::string& kind, long long m,
               const std::string& mask_path, std::uint64_t seed, const std::string& out_csv) {
  const asbsr::Image img = asbsr::read_image(input);
  asbsr::LatticeSpec spec;
  spec.kind = asbsr::lattice_kind_from_string(kind);
  spec.ny = img.ny;
  spec.nx = img.nx;
  spec.seed = seed;
  if (!mask_path.empty()) {
    const asbsr::SpectrumMask mask = asbsr::read_mask_pgm(mask_path);
    spec.m = mask.count();
  } else {
    spec.m = m;
  }
  const asbsr::SampleSet samples = asbsr::sample_image(img, asbsr::lattice_positions(spec));
  asbsr::write_positions_csv(samples, out_csv);
  std::cout << "sampled " << samples.samples.size() << " of " << (img.size()) << " pixels\n";
  return 0;
}

int cmd_reconstruct(const std::string& samples_csv, const std::string& mask_path,
                    const std::string& method, const asbsr::IterConfig& iter,
                    const std::string& out_dir) {
  const asbsr::SpectrumMask mask = asbsr::read_mask_pgm(mask_path);
  const asbsr::SampleSet samples =
      asbsr::read_positions_csv(samples_csv, mask.ny, mask.nx);

  asbsr::Image reconstructed;
  asbsr::ReconstructionReport report;
  if (method == "direct") {
    std::vector<asbsr::GridPos> coeffs;
    for (int u = 0; u < mask.ny; ++u) {
      for (int v = 0; v < mask.nx; ++v) {
        if (mask.test(u, v)) coeffs.push_back({u, v});
      }
    }
    reconstructed = asbsr::direct_reconstruct(samples, coeffs);
  } else if (method == "iterative") {
    asbsr::IterativeResult r = asbsr::iterative_reconstruct(samples, mask, iter);
    reconstructed = std::move(r.image);
    report = std::move(r.report);
  } else {
    throw std::invalid_argument("method must be 'iterative' or 'direct'");
  }

  asbsr::write_image(reconstructed, out_path(out_dir, "reconstructed.pgm"));
  asbsr::write_report_csv(report, out_path(out_dir, "report.csv"));
  std::cout << "iterations " << report.iterations_run << " final_residual "
            << format_real(report.final_residual) << "\n";
  return 0;
}

int cmd_pipeline(const std::string& config_path, const std::string& output_dir_flag) {
  asbsr::ExperimentConfig cfg = asbsr::config_from_json_file(config_path);
  if (!output_dir_flag.empty()) {
    cfg.output_dir = output_dir_flag;
  } else if (const char* env = std::getenv("ASBSR_OUTPUT_DIR"); env != nullptr && *env != '\0') {
    cfg.output_dir = env;
  }
  const asbsr::PipelineResult r = asbsr::run_pipeline(cfg);
  std::cout << "m " << r.m << " mask_fraction " << format_real(r.mask_fraction)
            << " iterations " << r.report.iterations_run << " final_residual "
            << format_real(r.report.final_residual);
  if (r.has_truth) std::cout << " rmse " << format_real(r.final_rmse);
  std::cout << "\n";
  return 0;
}

// cs-demo: one sparse-recovery run on a sinusoid mixture, with the signal,
// its spectrum, the sub-sampled spectrum, the recovery trace and the
// recovered spectrum written as CSV series.
int cmd_cs_demo(int n, int k, long long m, std::vector<double> freqs, std::vector<double> amps,
                std::uint64_t seed, int max_iters, const std::string& out_dir) {
  asbsr::SparseSignalSpec spec;
  spec.n = n;
  if (freqs.empty()) {
    // k frequencies spread evenly over the baseband
    for (int i = 0; i < k; ++i) freqs.push_back((2.0 * i + 1.0) / (2.0 * k));
  }
  if (static_cast<int>(freqs.size()) != k) {
    throw std::invalid_argument("need exactly k frequencies");
  }
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    const double amp = i < amps.size() ? amps[i] : 1.0;
    spec.components.push_back({freqs[i], amp});
  }
  const asbsr::Signal1D truth = asbsr::make_sparse_signal(spec);
  const std::vector<int> true_support = asbsr::sparse_signal_support(spec);

  asbsr::LatticeSpec lattice;
  lattice.kind = asbsr::LatticeKind::kRandom;
  lattice.m = m;
  lattice.ny = 1;
  lattice.nx = n;
  lattice.seed = seed;
  asbsr::Image row(1, n, 0.0);
  for (int i = 0; i < n; ++i) row.at(0, i) = truth[i];
  const asbsr::SampleSet samples =
      asbsr::sample_image(row, asbsr::lattice_positions(lattice));

  asbsr::Signal1D zero_filled(n, 0.0);
  for (const asbsr::Sample& s : samples.samples) zero_filled[s.col] = s.value;

  std::vector<double> trace;
  asbsr::KLargestReference ref;
  ref.truth = &truth;
  ref.support = &true_support;
  ref.rmse_norm_trace = &trace;
  asbsr::IterConfig iter;
  iter.max_iters = max_iters;
  iter.rel_tol = 1e-12;
  const asbsr::KLargestResult result = asbsr::recover_klargest(samples, k, iter, ref);

  asbsr::write_series_csv(truth, "signal", out_path(out_dir, "signal.csv"));
  asbsr::write_series_csv(asbsr::dct1_forward(truth), "coefficient",
                          out_path(out_dir, "spectrum.csv"));
  asbsr::write_series_csv(asbsr::dct1_forward(zero_filled), "coefficient",
                          out_path(out_dir, "spectrum_sampled.csv"));
  asbsr::write_series_csv(trace, "rmse_norm", out_path(out_dir, "trace.csv"));
  asbsr::write_series_csv(asbsr::dct1_forward(result.signal), "coefficient",
                          out_path(out_dir, "spectrum_recovered.csv"));

  json j;
  j["n"] = n;
  j["k"] = k;
  j["m"] = m;
  j["seed"] = seed;
  j["support_recovered"] = result.outcome.support_recovered;
  j["rmse_norm"] = result.outcome.rmse_norm;
  j["iterations"] = result.outcome.iterations;
  write_text_file(out_path(out_dir, "summary.json"), j.dump(2) + "\n");

  std::cout << (result.outcome.support_recovered ? "recovered" : "failed") << " rmse_norm "
            << format_real(result.outcome.rmse_norm) << " iterations "
            << result.outcome.iterations << "\n";
  return 0;
}

int cmd_cs_mc(int n, double freq, const std::string& m_list, long long trials,
              std::uint64_t seed, int max_iters, double noise_sigma, const std::string& out_csv) {
  asbsr::MonteCarloConfig cfg;
  cfg.n = n;
  cfg.frequency_fraction = freq;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.iter.max_iters = max_iters;
  cfg.noise_sigma = noise_sigma;

  std::stringstream ss(m_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) cfg.m_values.push_back(std::stoll(tok));
  }

  const asbsr::RedundancyTable table = asbsr::monte_carlo_redundancy(cfg);
  asbsr::write_redundancy_csv(table, out_csv);
  for (const asbsr::RedundancyRow& r : table.rows) {
    std::cout << "M " << r.m << " failure_rate " << format_real(r.failure_rate) << "\n";
  }
  return 0;
}

int cmd_bound(double ss, const std::string& base_str, bool as_json) {
  double base;
  if (base_str == "e") {
    base = 2.71828182845904523536;
  } else if (base_str == "2") {
    base = 2.0;
  } else if (base_str == "10") {
    base = 10.0;
  } else {
    base = std::stod(base_str);
  }
  const double r = asbsr::cs_bound_min_redundancy(ss, base);
  if (as_json) {
    json j;
    j["ss"] = ss;
    j["log_base"] = base;
    j["min_redundancy"] = r;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_real(r) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "asbsr: sparse image sampling near the spectrum-support rate and "
      "bounded-spectrum reconstruction"};
  app.require_subcommand(1);

  // --- msed ---
  auto* msed = app.add_subcommand(
      "msed", "Minimal spectrum support (and sparsity) for an error budget");
  std::string msed_input, msed_out_mask, msed_out_json;
  std::optional<double> msed_rmse, msed_mse;
  msed->add_option("--input", msed_input, "input image (PGM or PNG)")->required();
  msed->add_option("--target-rmse", msed_rmse, "error budget as RMSE in gray levels");
  msed->add_option("--target-mse", msed_mse, "error budget as per-pixel MSE");
  msed->add_option("--out-mask", msed_out_mask, "write the mask as PGM");
  msed->add_option("--out-json", msed_out_json, "write the summary as JSON");

  // --- sample ---
  auto* sample = app.add_subcommand("sample", "Sample an image over a lattice");
  std::string sample_input, sample_kind = "jittered", sample_mask, sample_out;
  long long sample_m = 0;
  std::uint64_t sample_seed = 0;
  sample->add_option("--input", sample_input, "input image (PGM or PNG)")->required();
  sample->add_option("--kind", sample_kind, "quasi_uniform | jittered | random");
  sample->add_option("--m", sample_m, "sample budget");
  sample->add_option("--mask", sample_mask, "mask PGM whose cell count sets the budget");
  sample->add_option("--seed", sample_seed, "lattice seed");
  sample->add_option("--out", sample_out, "output positions CSV")->required();

  // --- reconstruct ---
  auto* rec = app.add_subcommand("reconstruct", "Reconstruct an image from samples and a mask");
  std::string rec_samples, rec_mask, rec_method = "iterative", rec_init = "nearest_neighbor";
  std::string rec_out = "out";
  asbsr::IterConfig rec_iter;
  rec->add_option("--samples", rec_samples, "positions CSV")->required();
  rec->add_option("--mask", rec_mask, "mask PGM")->required();
  rec->add_option("--method", rec_method, "iterative | direct");
  rec->add_option("--max-iters", rec_iter.max_iters, "iteration cap");
  rec->add_option("--rel-tol", rec_iter.rel_tol, "residual relative-change tolerance");
  rec->add_option("--init", rec_init, "zero_fill | nearest_neighbor");
  rec->add_option("--out-dir", rec_out, "output directory");

  // --- pipeline ---
  auto* pipe = app.add_subcommand("pipeline", "Run a full experiment from a JSON config");
  std::string pipe_config, pipe_outdir;
  pipe->add_option("--config", pipe_config, "experiment config JSON")->required();
  pipe->add_option("--output-dir", pipe_outdir,
                   "override the config's output directory (also: ASBSR_OUTPUT_DIR)");

  // --- cs-demo ---
  auto* demo = app.add_subcommand("cs-demo", "One sparse sinusoid-mixture recovery run");
  int demo_n = 512, demo_k = 5, demo_iters = 300;
  long long demo_m = 76;
  std::uint64_t demo_seed = 1;
  std::vector<double> demo_freqs, demo_amps;
  std::string demo_out = "out";
  demo->add_option("--n", demo_n, "signal length");
  demo->add_option("--k", demo_k, "number of components");
  demo->add_option("--m", demo_m, "number of random samples");
  demo->add_option("--freqs", demo_freqs, "component frequencies as baseband fractions")
      ->delimiter(',');
  demo->add_option("--amps", demo_amps, "component amplitudes (default 1)")->delimiter(',');
  demo->add_option("--seed", demo_seed, "lattice seed");
  demo->add_option("--max-iters", demo_iters, "iteration cap");
  demo->add_option("--out-dir", demo_out, "output directory");

  // --- cs-mc ---
  auto* mc = app.add_subcommand("cs-mc", "Monte-Carlo failure-rate sweep over sample budgets");
  int mc_n = 512, mc_iters = 64;
  double mc_freq = 0.5, mc_noise = 0.0;
  long long mc_trials = 1000;
  std::uint64_t mc_seed = 1;
  std::string mc_mlist = "8,12,16,20,24,28,32,36,40,44,48";
  std::string mc_out = "redundancy.csv";
  mc->add_option("--n", mc_n, "signal length");
  mc->add_option("--freq", mc_freq, "sinusoid frequency as a baseband fraction");
  mc->add_option("--m-list", mc_mlist, "comma-separated sample budgets");
  mc->add_option("--trials", mc_trials, "trials per budget");
  mc->add_option("--seed", mc_seed, "master seed");
  mc->add_option("--max-iters", mc_iters, "iteration cap per trial");
  mc->add_option("--noise-sigma", mc_noise, "additive white noise sigma on the samples");
  mc->add_option("--out", mc_out, "output CSV");

  // --- bound ---
  auto* bound = app.add_subcommand("bound", "Minimal redundancy satisfying the sampling bound");
  double bound_ss = 0.1;
  std::string bound_base = "e";
  bool bound_json = false;
  bound->add_option("--ss", bound_ss, "spectrum sparsity in (0, 1)")->required();
  bound->add_option("--base", bound_base, "logarithm base: e, 2, 10 or a number");
  bound->add_flag("--json", bound_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (msed->parsed()) {
      return cmd_msed(msed_input, msed_rmse, msed_mse, msed_out_mask, msed_out_json);
    }
    if (sample->parsed()) {
      return cmd_sample(sample_input, sample_kind, sample_m, sample_mask, sample_seed,
                        sample_out);
    }
    if (rec->parsed()) {
      rec_iter.init = asbsr::init_method_from_string(rec_init);
      return cmd_reconstruct(rec_samples, rec_mask, rec_method, rec_iter, rec_out);
    }
    if (pipe->parsed()) {
      return cmd_pipeline(pipe_config, pipe_outdir);
    }
    if (demo->parsed()) {
      return cmd_cs_demo(demo_n, demo_k, demo_m, demo_freqs, demo_amps, demo_seed, demo_iters,
                         demo_out);
    }
    if (mc->parsed()) {
      return cmd_cs_mc(mc_n, mc_freq, mc_mlist, mc_trials, mc_seed, mc_iters, mc_noise, mc_out);
    }
    if (bound->parsed()) {
      return cmd_bound(bound_ss, bound_base, bound_json);
    }
  } catch (const asbsr::ParseError& e) {
    std::cerr << "error[parse-error]: " << e.what() << "\n";
    return 1;
  } catch (const asbsr::UnsupportedFormatError& e) {
    std::cerr << "error[unsupported-format]: " << e.what() << "\n";
    return 1;
  } catch (const asbsr::SingularSystemError& e) {
    std::cerr << "error[singular-system]: " << e.what() << "\n";
    return 1;
  } catch (const asbsr::InfeasibleError& e) {
    std::cerr << "error[infeasible]: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error[invalid-argument]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[runtime]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
