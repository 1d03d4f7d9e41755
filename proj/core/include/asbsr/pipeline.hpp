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

#ifndef ASBSR_PIPELINE_HPP_
#define ASBSR_PIPELINE_HPP_

#include <string>

#include "asbsr/config.hpp"
#include "asbsr/reconstruction.hpp"

namespace asbsr {

struct PipelineResult {
  std::string output_dir;
  long long m = 0;
  long long mask_cells = 0;
  double mask_fraction = 0.0;
  bool has_truth = false;
  double final_rmse = 0.0;       // vs truth, when known
  double final_trimmed90 = 0.0;  // vs truth, when known
  ReconstructionReport report;
};

/// Runs one sampling-and-reconstruction experiment end to end:
/// resolve the image and the mask, derive the sample budget from the mask
/// area, generate the lattice, sample, reconstruct, and write the artifacts
/// (reconstructed.pgm, mask.pgm, positions.csv, report.csv, report.json,
/// manifest.json, truth.pgm for synthetic inputs, optionally trace.svg)
/// into cfg.output_dir. All outputs are deterministic functions of the
/// config; replaying the manifest reproduces the CSV files byte for byte.
PipelineResult run_pipeline(const ExperimentConfig& cfg);

}  // namespace asbsr

#endif  // ASBSR_PIPELINE_HPP_
