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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "asbsr/cs_lab.hpp"
#include "asbsr/dct.hpp"
#include "asbsr/lattices.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace asbsr;
using namespace asbsr_test;

namespace {

SampleSet sample_signal(const Signal1D& sig, const std::vector<GridPos>& pos) {
  Image row(1, static_cast<int>(sig.size()), 0.0);
  for (std::size_t i = 0; i < sig.size(); ++i) row.at(0, static_cast<int>(i)) = sig[i];
  return sample_image(row, pos);
}

}  // namespace

TEST_CASE("make_sparse_signal places one coefficient per component") {
  SparseSignalSpec spec;
  spec.n = 512;
  spec.components = {{0.5, 1.0}};
  const Signal1D sig = make_sparse_signal(spec);
  const Spectrum1D g = dct1_forward(sig);
  CHECK(g[256] == doctest::Approx(1.0).epsilon(1e-10));
  for (int i = 0; i < 512; ++i) {
    if (i != 256) CHECK(std::fabs(g[i]) < 1e-10);
  }
}

TEST_CASE("the five-component mixture has support size five") {
  SparseSignalSpec spec;
  spec.n = 512;
  for (double f : {0.1, 0.3, 0.5, 0.7, 0.9}) spec.components.push_back({f, 1.0});
  CHECK(sparse_signal_support(spec) == std::vector<int>{51, 153, 256, 358, 460});
  const Signal1D sig = make_sparse_signal(spec);
  const Spectrum1D g = dct1_forward(sig);
  int nonzero = 0;
  for (double c : g) nonzero += std::fabs(c) > 1e-9;
  CHECK(nonzero == 5);
  // orthonormal basis: signal energy equals the sum of squared amplitudes
  double energy = 0.0;
  for (double v : sig) energy += v * v;
  CHECK(energy == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("frequency quantization collisions are rejected") {
  SparseSignalSpec spec;
  spec.n = 512;
  spec.components = {{0.5, 1.0}, {0.5005, 1.0}};  // both round to index 256
  CHECK_THROWS_AS(make_sparse_signal(spec), std::invalid_argument);
}

TEST_CASE("recover_klargest is exact from full sampling in one iteration") {
  SparseSignalSpec spec;
  spec.n = 128;
  spec.components = {{0.2, 1.0}, {0.6, -0.5}, {0.85, 2.0}};
  const Signal1D truth = make_sparse_signal(spec);
  const std::vector<int> support = sparse_signal_support(spec);

  std::vector<GridPos> all;
  for (int i = 0; i < 128; ++i) all.push_back({0, i});
  IterConfig cfg;
  cfg.max_iters = 5;
  std::vector<double> trace;
  KLargestReference ref;
  ref.truth = &truth;
  ref.support = &support;
  ref.rmse_norm_trace = &trace;
  const KLargestResult r = recover_klargest(sample_signal(truth, all), 3, cfg, ref);
  CHECK(r.outcome.support_recovered);
  CHECK(r.outcome.rmse_norm < 1e-10);
  // the very first projection already lands on the signal; the loop needs
  // one more look to see the residual stabilize
  CHECK(trace[0] < 1e-10);
  CHECK(r.outcome.iterations <= 2);
}

TEST_CASE("recover_klargest solves the one-sample scalar case") {
  // truth: the basis function whose magnitude at node 0 is the largest, so
  // the first detection locks the right index and the scalar system solves
  // exactly.
  const int n = 16;
  int best_u = 0;
  double best = 0.0;
  for (int u = 0; u < n; ++u) {
    if (std::fabs(dct_basis(n, u, 0)) > best) {
      best = std::fabs(dct_basis(n, u, 0));
      best_u = u;
    }
  }
  Spectrum1D g(n, 0.0);
  g[best_u] = 2.0;
  const Signal1D truth = dct1_inverse(g);
  REQUIRE(std::fabs(truth[0]) > 1e-12);

  IterConfig cfg;
  cfg.max_iters = 200;
  cfg.rel_tol = 0.0;
  std::vector<int> want{best_u};
  KLargestReference ref;
  ref.truth = &truth;
  ref.support = &want;
  const KLargestResult r = recover_klargest(sample_signal(truth, {{0, 0}}), 1, cfg, ref);
  CHECK(r.outcome.support_recovered);
  CHECK(r.outcome.rmse_norm < 1e-9);
}

TEST_CASE("recover_klargest validates k against the sample count") {
  SparseSignalSpec spec;
  spec.n = 32;
  spec.components = {{0.4, 1.0}};
  const Signal1D truth = make_sparse_signal(spec);
  const SampleSet s = sample_signal(truth, {{0, 1}, {0, 5}});
  IterConfig cfg;
  CHECK_THROWS_AS(recover_klargest(s, 3, cfg), std::invalid_argument);
}

TEST_CASE("with a stable detection the adaptive loop equals the fixed-mask loop") {
  SparseSignalSpec spec;
  spec.n = 64;
  spec.components = {{0.15, 1.0}, {0.55, 0.8}, {0.9, 1.2}};
  const Signal1D truth = make_sparse_signal(spec);
  const std::vector<int> support = sparse_signal_support(spec);

  LatticeSpec lat;
  lat.kind = LatticeKind::kRandom;
  lat.m = 48;
  lat.ny = 1;
  lat.nx = 64;
  lat.seed = 21;
  const SampleSet s = sample_signal(truth, lattice_positions(lat));

  IterConfig cfg;
  cfg.max_iters = 50;
  cfg.rel_tol = 0.0;
  cfg.init = InitMethod::kZeroFill;
  const KLargestResult adaptive = recover_klargest(s, 3, cfg);
  REQUIRE(adaptive.support == support);

  SpectrumMask mask(1, 64, false);
  for (int u : support) mask.set(0, u);
  const IterativeResult fixed = iterative_reconstruct(s, mask, cfg);
  CHECK(max_abs_diff(adaptive.signal, fixed.image.pix) < 1e-10);
}

TEST_CASE("monte_carlo_redundancy sees no failures at full sampling") {
  MonteCarloConfig cfg;
  cfg.n = 64;
  cfg.frequency_fraction = 0.5;
  cfg.m_values = {64};
  cfg.trials = 50;
  cfg.seed = 9;
  const RedundancyTable t = monte_carlo_redundancy(cfg);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].failures == 0);
  CHECK(t.rows[0].failure_rate == 0.0);
  CHECK(t.rows[0].redundancy == doctest::Approx(64.0));
  CHECK(t.rows[0].sparsity == doctest::Approx(1.0 / 64.0));
}

TEST_CASE("monte_carlo_redundancy is deterministic given its seed") {
  MonteCarloConfig cfg;
  cfg.n = 128;
  cfg.frequency_fraction = 0.3;
  cfg.m_values = {6, 10, 14};
  cfg.trials = 60;
  cfg.seed = 4242;
  cfg.iter.max_iters = 32;
  const RedundancyTable a = monte_carlo_redundancy(cfg);
  const RedundancyTable b = monte_carlo_redundancy(cfg);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].failures == b.rows[i].failures);
  }
  // more samples should not hurt, beyond noise
  CHECK(a.rows[0].failure_rate + 0.15 >= a.rows[2].failure_rate);
}

TEST_CASE("cs_bound_min_redundancy satisfies its defining equation") {
  for (double ss : {0.01, 0.1, 0.2, 0.4, 0.9, 1.0 - 1e-9}) {
    for (double base : {2.0, 2.71828182845904523536, 10.0}) {
      const double r = cs_bound_min_redundancy(ss, base);
      const double g = r + 2.0 * std::log(r * ss) / std::log(base);
      CHECK(std::fabs(g) < 1e-8);
    }
  }
}

TEST_CASE("cs_bound_min_redundancy matches the grid-scan oracle") {
  const double e = 2.71828182845904523536;
  for (double ss : {0.1, 0.4}) {
    for (double base : {2.0, e, 10.0}) {
      CHECK(std::fabs(cs_bound_min_redundancy(ss, base) - oracle_bound_root(ss, base)) < 1e-8);
    }
  }
  CHECK(cs_bound_min_redundancy(0.1, e) == doctest::Approx(2.66).epsilon(0.004));
  CHECK(cs_bound_min_redundancy(0.4, e) == doctest::Approx(1.30).epsilon(0.008));
  // near-unit sparsity: the root of r + 2 ln r = 0
  CHECK(cs_bound_min_redundancy(1.0 - 1e-12, e) == doctest::Approx(0.7034674224983938).epsilon(1e-6));
}

TEST_CASE("the bound root decreases as sparsity grows") {
  const double e = 2.71828182845904523536;
  CHECK(cs_bound_min_redundancy(0.1, e) > cs_bound_min_redundancy(0.4, e));
}

TEST_CASE("the five-of-512 example redundancy clears the bound for any base") {
  const double ss = 5.0 / 512.0;
  for (double base : {2.0, 2.71828182845904523536, 10.0}) {
    CHECK(15.2 > cs_bound_min_redundancy(ss, base));
  }
}
