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

#ifndef ASBSR_CS_LAB_HPP_
#define ASBSR_CS_LAB_HPP_

#include <cstdint>
#include <vector>

#include "asbsr/reconstruction.hpp"
#include "asbsr/types.hpp"

namespace asbsr {

/// One sinusoidal component: a transform basis function picked by its
/// frequency as a fraction of the baseband, with the given amplitude.
struct SparseComponent {
  double frequency_fraction = 0.5;  // in (0, 1)
  double amplitude = 1.0;
};

struct SparseSignalSpec {
  int n = 0;
  std::vector<SparseComponent> components;
};

/// Coefficient index of a component: round(frequency_fraction * (n - 1)).
int quantize_frequency(double frequency_fraction, int n);

/// Spectrum support of the signal, ascending. Throws std::invalid_argument
/// when two components quantize to the same index.
std::vector<int> sparse_signal_support(const SparseSignalSpec& spec);

/// Sum of the selected basis functions; the forward transform of the result
/// has exactly |components| nonzero coefficients.
Signal1D make_sparse_signal(const SparseSignalSpec& spec);

struct TrialOutcome {
  bool support_recovered = false;
  double rmse_norm = 0.0;  // RMSE / max |truth|, when a reference is supplied
  int iterations = 0;
};

struct KLargestResult {
  Signal1D signal;
  std::vector<int> support;  // detected support at termination, ascending
  TrialOutcome outcome;
};

/// Optional ground truth for scoring a recovery run. When rmse_norm_trace is
/// non-null and truth is given, the per-iteration normalized RMSE is
/// appended to it.
struct KLargestReference {
  const Signal1D* truth = nullptr;
  const std::vector<int>* support = nullptr;  // ascending
  std::vector<double>* rmse_norm_trace = nullptr;
};

/// Adaptive-support recovery of a 1D signal from a SampleSet with ny == 1:
/// starting from the zero-filled samples, each iteration transforms the
/// estimate, keeps the k largest-magnitude coefficients (ties toward the
/// smaller index), zeroes the rest, transforms back and restores the known
/// samples. Stops at max_iters or when the sample residual stabilizes.
KLargestResult recover_klargest(const SampleSet& samples, int k, const IterConfig& cfg,
                                const KLargestReference& ref = {});

struct RedundancyRow {
  double sparsity = 0.0;            // k / n
  double frequency_fraction = 0.0;
  long long m = 0;
  long long trials = 0;
  long long failures = 0;
  double failure_rate = 0.0;
  double redundancy = 0.0;          // m / k
};

struct RedundancyTable {
  std::vector<RedundancyRow> rows;
};

struct MonteCarloConfig {
  int n = 512;
  double frequency_fraction = 0.5;
  std::vector<long long> m_values;
  long long trials = 1000;
  std::uint64_t seed = 0;
  IterConfig iter{64, 1e-9, InitMethod::kZeroFill};
  double noise_sigma = 0.0;  // optional additive white noise on the samples
};

/// Single-component (k = 1) failure-rate sweep over the sample budgets in
/// m_values: each trial draws its own random lattice from a per-trial
/// substream of the seed, recovers, and counts a failure when the detected
/// support differs from the true index. Deterministic given the seed; trial
/// outcomes are independent, so aggregation is order-free.
RedundancyTable monte_carlo_redundancy(const MonteCarloConfig& cfg);

/// Root R* of g(R) = R + 2 log_base(R * ss) on (0, inf), found by bisection
/// to 1e-9; g is strictly increasing, so the bound R > -2 log_base(R * ss)
/// holds exactly for R > R*.
double cs_bound_min_redundancy(double ss, double log_base);

}  // namespace asbsr

#endif  // ASBSR_CS_LAB_HPP_
