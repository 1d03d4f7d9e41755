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

#include "asbsr/lattices.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "asbsr/rng.hpp"

namespace asbsr {

namespace {

void validate(const LatticeSpec& spec) {
  detail::require(spec.ny >= 1 && spec.nx >= 1, "lattice dimensions must be at least 1x1");
  detail::require(spec.m >= 1, "sample budget must be at least 1");
  detail::require(spec.m <= static_cast<long long>(spec.ny) * spec.nx,
                  "sample budget exceeds the grid size");
}

// Node index owning the continuous coordinate x in [0, n).
int node_of(double x, int n) {
  int k = static_cast<int>(std::floor(x));
  return std::clamp(k, 0, n - 1);
}

// Nodes whose centers fall inside primary cell i of extent d: the smallest
// and largest k with i*d <= k + 0.5 < (i+1)*d. Nonempty whenever d >= 1.
struct NodeRange {
  int lo, hi;
};
NodeRange cell_nodes(int i, double d, int n) {
  int lo = static_cast<int>(std::ceil(i * d - 0.5));
  int hi = static_cast<int>(std::ceil((i + 1) * d - 0.5)) - 1;
  lo = std::clamp(lo, 0, n - 1);
  hi = std::clamp(hi, lo, n - 1);
  return {lo, hi};
}

}  // namespace

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::kQuasiUniform: return "quasi_uniform";
    case LatticeKind::kJittered: return "jittered";
    case LatticeKind::kRandom: return "random";
  }
  return "jittered";
}

LatticeKind lattice_kind_from_string(const std::string& name) {
  if (name == "quasi_uniform") return LatticeKind::kQuasiUniform;
  if (name == "jittered") return LatticeKind::kJittered;
  if (name == "random") return LatticeKind::kRandom;
  throw std::invalid_argument("unknown lattice kind: " + name);
}

CellGrid primary_cell_grid(long long m, int ny, int nx) {
  detail::require(m >= 1, "sample budget must be at least 1");
  // Cell counts proportional to the image sides: mx/my ~ nx/ny with
  // mx*my >= m. Since m <= nx*ny, mx <= nx and my <= ny, so cells are at
  // least one node wide in each coordinate.
  CellGrid g;
  g.mx = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m) * nx / ny)));
  g.my = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m) * ny / nx)));
  g.mx = std::clamp(g.mx, 1, nx);
  g.my = std::clamp(g.my, 1, ny);
  // ceil rounding can still leave mx*my < m for skewed aspect ratios; grow
  // the larger side until the grid covers the budget.
  while (static_cast<long long>(g.mx) * g.my < m) {
    if (g.mx < nx && (g.my >= ny || g.mx * ny <= g.my * nx)) {
      ++g.mx;
    } else if (g.my < ny) {
      ++g.my;
    } else {
      break;
    }
  }
  g.dx = static_cast<double>(nx) / g.mx;
  g.dy = static_cast<double>(ny) / g.my;
  return g;
}

std::vector<GridPos> positions_quasi_uniform(const LatticeSpec& spec) {
  validate(spec);
  detail::require(spec.kind == LatticeKind::kQuasiUniform, "lattice kind mismatch");
  const CellGrid g = primary_cell_grid(spec.m, spec.ny, spec.nx);

  // All cell centers rounded to nodes, row-major over cells.
  std::vector<GridPos> nodes;
  nodes.reserve(static_cast<std::size_t>(g.mx) * g.my);
  for (int cy = 0; cy < g.my; ++cy) {
    const int r = node_of(cy * g.dy + 0.5 * g.dy, spec.ny);
    for (int cx = 0; cx < g.mx; ++cx) {
      const int c = node_of(cx * g.dx + 0.5 * g.dx, spec.nx);
      nodes.push_back({r, c});
    }
  }

  // Deduplicate, keeping first occurrences and remembering dropped ideals.
  std::unordered_set<long long> seen;
  std::vector<GridPos> kept;
  std::vector<GridPos> dropped;
  kept.reserve(nodes.size());
  for (const GridPos& p : nodes) {
    long long key = static_cast<long long>(p.row) * spec.nx + p.col;
    if (seen.insert(key).second) {
      kept.push_back(p);
    } else {
      dropped.push_back(p);
    }
  }

  if (static_cast<long long>(kept.size()) > spec.m) {
    kept.resize(spec.m);
  } else if (static_cast<long long>(kept.size()) < spec.m) {
    // Rounding collisions: fill with the free nodes nearest to the dropped
    // ideal positions, in drop order.
    for (const GridPos& ideal : dropped) {
      if (static_cast<long long>(kept.size()) == spec.m) break;
      long long best_key = -1;
      long long best_d2 = -1;
      GridPos best{};
      for (int r = 0; r < spec.ny; ++r) {
        for (int c = 0; c < spec.nx; ++c) {
          long long key = static_cast<long long>(r) * spec.nx + c;
          if (seen.count(key)) continue;
          long long dr = r - ideal.row, dc = c - ideal.col;
          long long d2 = dr * dr + dc * dc;
          if (best_key < 0 || d2 < best_d2) {
            best_key = key;
            best_d2 = d2;
            best = {r, c};
          }
        }
      }
      if (best_key < 0) break;
      seen.insert(best_key);
      kept.push_back(best);
    }
    detail::require(static_cast<long long>(kept.size()) == spec.m,
                    "quasi-uniform lattice could not reach the sample budget");
  }
  return kept;
}

std::vector<GridPos> positions_jittered(const LatticeSpec& spec) {
  validate(spec);
  detail::require(spec.kind == LatticeKind::kJittered, "lattice kind mismatch");
  const CellGrid g = primary_cell_grid(spec.m, spec.ny, spec.nx);
  Rng rng(spec.seed);

  // One node per primary cell, taking the first m cells in row-major order.
  // A drawn node is accepted only if its center lies inside the generating
  // cell, which keeps cells disjoint and the budget exact; after bounded
  // retries the cell-center node is used.
  auto draw_coord = [&rng](int cell, double extent, int n) {
    const NodeRange range = cell_nodes(cell, extent, n);
    for (int attempt = 0; attempt < 16; ++attempt) {
      const double x = (cell + rng.uniform()) * extent;
      const int k = node_of(x, n);
      if (k >= range.lo && k <= range.hi) return k;
    }
    return std::clamp(node_of(cell * extent + 0.5 * extent, n), range.lo, range.hi);
  };

  std::vector<GridPos> out;
  out.reserve(spec.m);
  long long remaining = spec.m;
  for (int cy = 0; cy < g.my && remaining > 0; ++cy) {
    for (int cx = 0; cx < g.mx && remaining > 0; ++cx) {
      const int r = draw_coord(cy, g.dy, spec.ny);
      const int c = draw_coord(cx, g.dx, spec.nx);
      out.push_back({r, c});
      --remaining;
    }
  }
  return out;
}

std::vector<GridPos> positions_random(const LatticeSpec& spec) {
  validate(spec);
  detail::require(spec.kind == LatticeKind::kRandom, "lattice kind mismatch");
  const long long total = static_cast<long long>(spec.ny) * spec.nx;
  Rng rng(spec.seed);

  // Partial Fisher-Yates over the flattened grid.
  std::vector<std::uint32_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0u);
  std::vector<GridPos> out;
  out.reserve(spec.m);
  for (long long i = 0; i < spec.m; ++i) {
    const long long j = i + static_cast<long long>(rng.uniform_below(total - i));
    std::swap(idx[i], idx[j]);
    const int r = static_cast<int>(idx[i] / spec.nx);
    const int c = static_cast<int>(idx[i] % spec.nx);
    out.push_back({r, c});
  }
  return out;
}

std::vector<GridPos> lattice_positions(const LatticeSpec& spec) {
  switch (spec.kind) {
    case LatticeKind::kQuasiUniform: return positions_quasi_uniform(spec);
    case LatticeKind::kJittered: return positions_jittered(spec);
    case LatticeKind::kRandom: return positions_random(spec);
  }
  throw std::invalid_argument("unknown lattice kind");
}

SampleSet sample_image(const Image& image, const std::vector<GridPos>& positions) {
  detail::require(image.ny >= 1 && image.nx >= 1, "empty image");
  detail::require(!positions.empty(), "no sample positions");
  std::unordered_set<long long> seen;
  SampleSet out;
  out.ny = image.ny;
  out.nx = image.nx;
  out.samples.reserve(positions.size());
  for (const GridPos& p : positions) {
    detail::require(p.row >= 0 && p.row < image.ny && p.col >= 0 && p.col < image.nx,
                    "sample position out of range");
    detail::require(seen.insert(static_cast<long long>(p.row) * image.nx + p.col).second,
                    "duplicate sample position");
    out.samples.push_back({p.row, p.col, image.at(p.row, p.col)});
  }
  return out;
}

}  // namespace asbsr
