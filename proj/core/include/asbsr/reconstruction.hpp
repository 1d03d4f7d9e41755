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

#ifndef ASBSR_RECONSTRUCTION_HPP_
#define ASBSR_RECONSTRUCTION_HPP_

#include <string>
#include <vector>

#include "asbsr/types.hpp"

namespace asbsr {

enum class InitMethod { kZeroFill, kNearestNeighbor };

std::string to_string(InitMethod method);
InitMethod init_method_from_string(const std::string& name);

struct IterConfig {
  int max_iters = 1000;
  double rel_tol = 1e-8;  // stop when the sample residual stops changing relatively
  InitMethod init = InitMethod::kNearestNeighbor;
};

struct ReconstructionReport {
  int iterations_run = 0;
  std::vector<double> residual;        // per-iteration sample-consistency residual (RMS)
  std::vector<double> rmse_vs_truth;   // per-iteration, only when truth is supplied
  std::vector<double> rmse_trimmed90;  // per-iteration, only when truth is supplied
  double final_residual = 0.0;
  bool converged = false;
};

/// Fills the unsampled pixels: zero fill, or the value of the nearest sampled
/// position (Euclidean distance; ties resolved toward the smallest row, then
/// the smallest column). Sampled pixels keep their values exactly.
Image interpolate_initial(const SampleSet& samples, InitMethod method);

struct IterativeResult {
  Image image;
  ReconstructionReport report;
};

/// Alternating-projection reconstruction: transform the current estimate,
/// zero every coefficient outside the mask, transform back, then restore the
/// known samples. The residual is the RMS mismatch at the sampled positions
/// measured before restoration; iteration stops at max_iters or when the
/// residual's relative change drops below rel_tol. When truth is supplied the
/// per-iteration error traces are populated.
IterativeResult iterative_reconstruct(const SampleSet& samples, const SpectrumMask& mask,
                                      const IterConfig& cfg, const Image* truth = nullptr);

struct DirectOptions {
  double condition_limit = 1e12;  // estimates above this raise SingularSystemError
  int max_system_size = 4096;    // dense solve guardrail
};

/// Direct reconstruction: builds the sub-transform matrix for the given
/// coefficient indices and the sample positions, solves the square system
/// for the coefficients, zero-fills the rest of the spectrum and inverse
/// transforms. Requires |coeff_indices| == |samples|. Throws
/// SingularSystemError when the sample positions do not admit a usable
/// inverse.
Image direct_reconstruct(const SampleSet& samples, const std::vector<GridPos>& coeff_indices,
                         const DirectOptions& opts = {});

struct ErrorMetrics {
  double rmse = 0.0;       // over all pixels
  double trimmed90 = 0.0;  // RMS over the 90% of pixels with smallest absolute error
};

ErrorMetrics error_metrics(const Image& reconstructed, const Image& truth);

}  // namespace asbsr

#endif  // ASBSR_RECONSTRUCTION_HPP_
