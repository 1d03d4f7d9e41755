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

#ifndef ASBSR_LATTICES_HPP_
#define ASBSR_LATTICES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "asbsr/types.hpp"

namespace asbsr {

enum class LatticeKind { kQuasiUniform, kJittered, kRandom };

std::string to_string(LatticeKind kind);
LatticeKind lattice_kind_from_string(const std::string& name);

struct LatticeSpec {
  LatticeKind kind = LatticeKind::kJittered;
  long long m = 0;  // sample budget, 1 <= m <= nx*ny
  int ny = 0;
  int nx = 0;
  std::uint64_t seed = 0;
};

/// The grid of primary cells shared by the quasi-uniform and jittered
/// lattices: mx * my >= m cells of extent (dx, dy) tiling the image; the
/// surplus cells at the row-major end stay empty.
struct CellGrid {
  int mx = 0;
  int my = 0;
  double dx = 0.0;
  double dy = 0.0;
};

CellGrid primary_cell_grid(long long m, int ny, int nx);

/// Cell centers rounded to the nearest dense-lattice node. Deterministic;
/// the seed is unused.
std::vector<GridPos> positions_quasi_uniform(const LatticeSpec& spec);

/// One node per primary cell, drawn uniformly and independently per
/// coordinate within the cell extent. Reproducible from the seed.
std::vector<GridPos> positions_jittered(const LatticeSpec& spec);

/// m distinct nodes drawn uniformly without replacement. Reproducible from
/// the seed.
std::vector<GridPos> positions_random(const LatticeSpec& spec);

/// Dispatches on spec.kind.
std::vector<GridPos> lattice_positions(const LatticeSpec& spec);

/// Copies the pixel values at the given positions. Positions must be
/// distinct and in range.
SampleSet sample_image(const Image& image, const std::vector<GridPos>& positions);

}  // namespace asbsr

#endif  // ASBSR_LATTICES_HPP_
