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

#include "asbsr/cs_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "asbsr/dct.hpp"
#include "asbsr/lattices.hpp"
#include "asbsr/rng.hpp"

namespace asbsr {

int quantize_frequency(double frequency_fraction, int n) {
  detail::require(n >= 1, "signal length must be at least 1");
  detail::require(frequency_fraction > 0.0 && frequency_fraction < 1.0,
                  "frequency fraction must lie in (0, 1)");
  return static_cast<int>(std::lround(frequency_fraction * (n - 1)));
}

std::vector<int> sparse_signal_support(const SparseSignalSpec& spec) {
  detail::require(spec.n >= 1, "signal length must be at least 1");
  detail::require(!spec.components.empty(), "spec has no components");
  detail::require(static_cast<int>(spec.components.size()) <= spec.n,
                  "more components than signal samples");
  std::vector<int> support;
  support.reserve(spec.components.size());
  for (const SparseComponent& c : spec.components) {
    support.push_back(quantize_frequency(c.frequency_fraction, spec.n));
  }
  std::sort(support.begin(), support.end());
  detail::require(std::adjacent_find(support.begin(), support.end()) == support.end(),
                  "two components quantize to the same coefficient index");
  return support;
}

Signal1D make_sparse_signal(const SparseSignalSpec& spec) {
  sparse_signal_support(spec);  // validates
  Spectrum1D spectrum(spec.n, 0.0);
  for (const SparseComponent& c : spec.components) {
    detail::require(std::isfinite(c.amplitude), "component amplitude must be finite");
    spectrum[quantize_frequency(c.frequency_fraction, spec.n)] = c.amplitude;
  }
  return dct1_inverse(spectrum);
}

namespace {

// Indices of the k largest-magnitude coefficients, ascending; ties prefer
// the smaller index.
void detect_support(const Spectrum1D& spectrum, int k, std::vector<int>& out) {
  const int n = static_cast<int>(spectrum.size());
  out.resize(n);
  std::iota(out.begin(), out.end(), 0);
  std::nth_element(out.begin(), out.begin() + (k - 1), out.end(), [&](int a, int b) {
    const double ma = std::fabs(spectrum[a]);
    const double mb = std::fabs(spectrum[b]);
    return ma != mb ? ma > mb : a < b;
  });
  out.resize(k);
  std::sort(out.begin(), out.end());
}

}  // namespace

KLargestResult recover_klargest(const SampleSet& samples, int k, const IterConfig& cfg,
                                const KLargestReference& ref) {
  detail::require(samples.ny == 1, "k-largest recovery expects a 1D sample set (ny == 1)");
  detail::require(samples.nx >= 1 && !samples.samples.empty(), "sample set is empty");
  detail::require(k >= 1, "k must be at least 1");
  detail::require(k <= static_cast<int>(samples.samples.size()),
                  "k must not exceed the number of samples");
  detail::require(cfg.max_iters >= 1, "max_iters must be at least 1");

  const int n = samples.nx;
  for (const Sample& s : samples.samples) {
    detail::require(s.row == 0 && s.col >= 0 && s.col < n, "sample position out of range");
  }

  Signal1D estimate(n, 0.0);
  for (const Sample& s : samples.samples) estimate[s.col] = s.value;

  double truth_peak = 0.0;
  if (ref.truth != nullptr) {
    detail::require(ref.truth->size() == static_cast<std::size_t>(n),
                    "reference signal length mismatch");
    for (double v : *ref.truth) truth_peak = std::max(truth_peak, std::fabs(v));
  }
  auto rmse_vs_truth = [&](const Signal1D& sig) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = sig[i] - (*ref.truth)[i];
      acc += d * d;
    }
    const double rmse = std::sqrt(acc / n);
    return truth_peak > 0.0 ? rmse / truth_peak : rmse;
  };

  KLargestResult result;
  std::vector<int> support;
  double prev_residual = std::numeric_limits<double>::infinity();

  for (int it = 0; it < cfg.max_iters; ++it) {
    Spectrum1D spectrum = dct1_forward(estimate);
    detect_support(spectrum, k, support);
    Spectrum1D kept(n, 0.0);
    for (int idx : support) kept[idx] = spectrum[idx];
    estimate = dct1_inverse(kept);

    double acc = 0.0;
    for (const Sample& s : samples.samples) {
      const double d = estimate[s.col] - s.value;
      acc += d * d;
    }
    const double residual = std::sqrt(acc / samples.samples.size());
    for (const Sample& s : samples.samples) estimate[s.col] = s.value;

    if (ref.truth != nullptr && ref.rmse_norm_trace != nullptr) {
      ref.rmse_norm_trace->push_back(rmse_vs_truth(estimate));
    }

    result.outcome.iterations = it + 1;
    if (residual == 0.0 ||
        (std::isfinite(prev_residual) &&
         std::fabs(prev_residual - residual) <= cfg.rel_tol * std::max(prev_residual, 1e-300))) {
      break;
    }
    prev_residual = residual;
  }

  result.signal = std::move(estimate);
  result.support = std::move(support);

  if (ref.support != nullptr) {
    result.outcome.support_recovered = (result.support == *ref.support);
  }
  if (ref.truth != nullptr) {
    result.outcome.rmse_norm = rmse_vs_truth(result.signal);
  }
  return result;
}

RedundancyTable monte_carlo_redundancy(const MonteCarloConfig& cfg) {
  detail::require(cfg.n >= 2, "signal length must be at least 2");
  detail::require(cfg.trials >= 1, "trials must be at least 1");
  detail::require(!cfg.m_values.empty(), "no sample budgets given");
  for (long long m : cfg.m_values) {
    detail::require(m >= 1 && m <= cfg.n, "sample budget must lie in [1, n]");
  }

  SparseSignalSpec spec;
  spec.n = cfg.n;
  spec.components = {{cfg.frequency_fraction, 1.0}};
  const Signal1D truth = make_sparse_signal(spec);
  const std::vector<int> true_support = sparse_signal_support(spec);

  RedundancyTable table;
  for (std::size_t mi = 0; mi < cfg.m_values.size(); ++mi) {
    const long long m = cfg.m_values[mi];
    long long failures = 0;
    for (long long t = 0; t < cfg.trials; ++t) {
      Rng trial_rng = Rng::substream(cfg.seed, mi, static_cast<std::uint64_t>(t));
      LatticeSpec lattice;
      lattice.kind = LatticeKind::kRandom;
      lattice.m = m;
      lattice.ny = 1;
      lattice.nx = cfg.n;
      lattice.seed = trial_rng.next_u64();

      Image row(1, cfg.n, 0.0);
      for (int i = 0; i < cfg.n; ++i) row.at(0, i) = truth[i];
      SampleSet samples = sample_image(row, lattice_positions(lattice));
      if (cfg.noise_sigma > 0.0) {
        for (Sample& s : samples.samples) s.value += cfg.noise_sigma * trial_rng.normal();
      }

      KLargestReference ref;
      ref.support = &true_support;
      const KLargestResult r = recover_klargest(samples, 1, cfg.iter, ref);
      if (!r.outcome.support_recovered) ++failures;
    }

    RedundancyRow row;
    row.sparsity = 1.0 / cfg.n;
    row.frequency_fraction = cfg.frequency_fraction;
    row.m = m;
    row.trials = cfg.trials;
    row.failures = failures;
    row.failure_rate = static_cast<double>(failures) / static_cast<double>(cfg.trials);
    row.redundancy = static_cast<double>(m);  // k == 1
    table.rows.push_back(row);
  }
  return table;
}

double cs_bound_min_redundancy(double ss, double log_base) {
  detail::require(ss > 0.0 && ss < 1.0, "sparsity must lie in (0, 1)");
  detail::require(log_base > 1.0, "logarithm base must exceed 1");
  const double lb = std::log(log_base);
  auto g = [&](double r) { return r + 2.0 * std::log(r * ss) / lb; };

  double lo = 1e-12;
  double hi = 1.0;
  while (g(hi) < 0.0) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-12) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace asbsr
