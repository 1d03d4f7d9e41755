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

#include <benchmark/benchmark.h>

#include <vector>

#include "asbsr/dct.hpp"
#include "asbsr/lattices.hpp"
#include "asbsr/linalg.hpp"
#include "asbsr/reconstruction.hpp"
#include "asbsr/rng.hpp"
#include "asbsr/shapes.hpp"

namespace {

using namespace asbsr;

Image bench_image(int n) {
  Rng rng(17);
  Image img(n, n, 0.0);
  for (double& v : img.pix) v = 255.0 * rng.uniform();
  return img;
}

void BM_Dct1Forward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  Signal1D x(n);
  for (double& v : x) v = rng.uniform();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dct1_forward(x));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Dct1Forward)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Dct1ForwardNonPow2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  Signal1D x(n);
  for (double& v : x) v = rng.uniform();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dct1_forward(x));
  }
}
BENCHMARK(BM_Dct1ForwardNonPow2)->Arg(63)->Arg(255)->Arg(511);

void BM_Dct2RoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Image img = bench_image(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dct2_inverse(dct2_forward(img)));
  }
}
BENCHMARK(BM_Dct2RoundTrip)->Arg(64)->Arg(256)->Arg(512);

void BM_IterativeReconstruct100(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ShapeSpec pie;
  pie.family = ShapeFamily::kPieSector;
  const SpectrumMask mask = make_mask(fit_shape_to_budget(pie, n, n, 0.3), n, n);
  const Image img = bench_image(n);
  LatticeSpec lat;
  lat.kind = LatticeKind::kJittered;
  lat.m = mask.count();
  lat.ny = n;
  lat.nx = n;
  lat.seed = 1;
  const SampleSet samples = sample_image(img, lattice_positions(lat));
  IterConfig cfg;
  cfg.max_iters = 100;
  cfg.rel_tol = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterative_reconstruct(samples, mask, cfg));
  }
}
BENCHMARK(BM_IterativeReconstruct100)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_NearestNeighborInit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Image img = bench_image(n);
  LatticeSpec lat;
  lat.kind = LatticeKind::kRandom;
  lat.m = static_cast<long long>(n) * n / 4;
  lat.ny = n;
  lat.nx = n;
  lat.seed = 2;
  const SampleSet samples = sample_image(img, lattice_positions(lat));
  for (auto _ : state) {
    benchmark::DoNotOptimize(interpolate_initial(samples, InitMethod::kNearestNeighbor));
  }
}
BENCHMARK(BM_NearestNeighborInit)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_LuSolve(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(5);
  std::vector<double> a(static_cast<std::size_t>(m) * m);
  for (double& v : a) v = rng.uniform() - 0.5;
  for (int i = 0; i < m; ++i) a[static_cast<std::size_t>(i) * m + i] += m;  // well conditioned
  std::vector<double> b(m, 1.0);
  for (auto _ : state) {
    LuSolver lu(a, m);
    benchmark::DoNotOptimize(lu.solve(b));
  }
}
BENCHMARK(BM_LuSolve)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_JitteredLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  LatticeSpec lat;
  lat.kind = LatticeKind::kJittered;
  lat.m = static_cast<long long>(n) * n / 2;
  lat.ny = n;
  lat.nx = n;
  lat.seed = 9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(positions_jittered(lat));
  }
}
BENCHMARK(BM_JitteredLattice)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
