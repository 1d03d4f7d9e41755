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

#include "asbsr/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "asbsr/dct.hpp"
#include "asbsr/image_io.hpp"
#include "asbsr/lattices.hpp"
#include "asbsr/spectral.hpp"
#include "asbsr/text_io.hpp"
#include "json.hpp"

namespace asbsr {

namespace {

using nlohmann::json;

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

PipelineResult run_pipeline(const ExperimentConfig& cfg) {
  // Resolve the base image.
  Image base;
  if (cfg.image.path) {
    base = read_image(*cfg.image.path);
  } else if (cfg.image.synthetic) {
    base = render_synthetic(*cfg.image.synthetic);
  } else {
    throw std::invalid_argument("config has no image source");
  }

  // Resolve the mask; a shape with a target fraction is fitted to it.
  SpectrumMask mask;
  ShapeSpec resolved_shape;
  bool have_shape = false;
  if (cfg.mask.path) {
    mask = read_mask_pgm(*cfg.mask.path);
    detail::require(mask.ny == base.ny && mask.nx == base.nx,
                    "mask dimensions do not match the image");
  } else if (cfg.mask.shape) {
    resolved_shape = *cfg.mask.shape;
    if (cfg.mask.target_fraction) {
      resolved_shape = fit_shape_to_budget(resolved_shape, base.ny, base.nx,
                                           *cfg.mask.target_fraction);
    }
    mask = make_mask(resolved_shape, base.ny, base.nx);
    have_shape = true;
  } else {
    throw std::invalid_argument("config has no mask source");
  }

  // Synthetic ground truth may be confined to the mask's spectrum support.
  const Image* truth = nullptr;
  Image truth_storage;
  if (cfg.image.synthetic) {
    if (cfg.image.synthetic->bound_to_mask) {
      Spectrum2D spectrum = dct2_forward(base);
      truth_storage = dct2_inverse(truncate_spectrum(spectrum, mask).spectrum);
    } else {
      truth_storage = base;
    }
    truth = &truth_storage;
  } else {
    truth_storage = base;
    truth = &truth_storage;
  }

  const long long mask_cells = mask.count();
  const long long total = static_cast<long long>(base.ny) * base.nx;
  const long long m = cfg.lattice.m.value_or(mask_cells);
  detail::require(m >= 1 && m <= total, "sample budget M exceeds the grid size");
  if (cfg.method == "direct") {
    detail::require(m == mask_cells,
                    "direct reconstruction needs exactly one sample per mask cell");
  }

  LatticeSpec lattice;
  lattice.kind = cfg.lattice.kind;
  lattice.m = m;
  lattice.ny = base.ny;
  lattice.nx = base.nx;
  lattice.seed = cfg.lattice.seed;
  const std::vector<GridPos> positions = lattice_positions(lattice);
  const SampleSet samples = sample_image(*truth, positions);

  PipelineResult result;
  Image reconstructed;
  if (cfg.method == "direct") {
    std::vector<GridPos> coeffs;
    coeffs.reserve(mask_cells);
    for (int u = 0; u < mask.ny; ++u) {
      for (int v = 0; v < mask.nx; ++v) {
        if (mask.test(u, v)) coeffs.push_back({u, v});
      }
    }
    reconstructed = direct_reconstruct(samples, coeffs);
    result.report.iterations_run = 0;
    result.report.converged = true;
    result.report.final_residual = 0.0;
  } else {
    IterativeResult iter = iterative_reconstruct(samples, mask, cfg.iter, truth);
    reconstructed = std::move(iter.image);
    result.report = std::move(iter.report);
  }

  result.m = m;
  result.mask_cells = mask_cells;
  result.mask_fraction = mask.area_fraction();
  result.output_dir = cfg.output_dir;
  if (truth != nullptr) {
    const ErrorMetrics em = error_metrics(reconstructed, *truth);
    result.has_truth = true;
    result.final_rmse = em.rmse;
    result.final_trimmed90 = em.trimmed90;
  }

  // --- artifacts -----------------------------------------------------------
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);
  const auto in_dir = [&](const char* name) { return (fs::path(cfg.output_dir) / name).string(); };

  write_image(reconstructed, in_dir("reconstructed.pgm"));
  write_mask_pgm(mask, in_dir("mask.pgm"));
  write_positions_csv(samples, in_dir("positions.csv"));
  write_report_csv(result.report, in_dir("report.csv"));
  if (cfg.image.synthetic) write_image(*truth, in_dir("truth.pgm"));
  if (cfg.emit_svg && result.report.iterations_run > 0) {
    std::vector<std::vector<double>> series{result.report.residual};
    std::vector<std::string> labels{"residual"};
    if (!result.report.rmse_vs_truth.empty()) {
      series.push_back(result.report.rmse_vs_truth);
      labels.push_back("rmse");
      series.push_back(result.report.rmse_trimmed90);
      labels.push_back("trimmed90");
    }
    write_series_svg(series, labels, in_dir("trace.svg"));
  }

  // Manifest: the resolved config (replayable as-is) plus derived values.
  {
    ExperimentConfig resolved = cfg;
    if (have_shape) {
      resolved.mask.shape = resolved_shape;
      resolved.mask.target_fraction.reset();  // scale is now explicit
    }
    resolved.lattice.m = m;
    json j = json::parse(config_to_json(resolved));
    j["resolved"]["m"] = m;
    j["resolved"]["mask_cells"] = mask_cells;
    j["resolved"]["mask_fraction"] = result.mask_fraction;
    j["resolved"]["ny"] = base.ny;
    j["resolved"]["nx"] = base.nx;
    write_text_file(in_dir("manifest.json"), j.dump(2) + "\n");
  }

  // Summary.
  {
    json j;
    j["m"] = m;
    j["mask_cells"] = mask_cells;
    j["mask_fraction"] = result.mask_fraction;
    j["method"] = cfg.method;
    j["iterations_run"] = result.report.iterations_run;
    j["converged"] = result.report.converged;
    j["final_residual"] = result.report.final_residual;
    if (result.has_truth) {
      j["final_rmse"] = result.final_rmse;
      j["final_trimmed90"] = result.final_trimmed90;
    }
    write_text_file(in_dir("report.json"), j.dump(2) + "\n");
  }

  return result;
}

}  // namespace asbsr
