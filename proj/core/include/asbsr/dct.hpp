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

#ifndef ASBSR_DCT_HPP_
#define ASBSR_DCT_HPP_

#include <vector>

#include "asbsr/types.hpp"

namespace asbsr {

// Orthonormal DCT-II / DCT-III pair. Forward coefficients are
//   gamma_u = alpha(u) * sum_k x_k cos(pi (2k+1) u / (2N)),
// with alpha(0) = sqrt(1/N) and alpha(u>0) = sqrt(2/N), so the transform
// matrix is orthogonal and Parseval holds exactly.
//
// Power-of-two lengths run a recursive even/odd factorization; other
// lengths multiply by a cached dense cosine matrix. Both paths are exact
// algorithms, not approximations.

Spectrum1D dct1_forward(const Signal1D& signal);
Signal1D dct1_inverse(const Spectrum1D& spectrum);

/// Separable 2D transform: rows first, then columns.
Spectrum2D dct2_forward(const Image& image);
Image dct2_inverse(const Spectrum2D& spectrum);

/// In-place variants reusing caller scratch; used by the iterative
/// reconstruction loop to avoid per-iteration allocation. grid has ny*nx
/// row-major entries; scratch must hold at least 2*max(ny,nx) doubles.
void dct2_forward_inplace(std::vector<double>& grid, int ny, int nx,
                          std::vector<double>& scratch);
void dct2_inverse_inplace(std::vector<double>& grid, int ny, int nx,
                          std::vector<double>& scratch);

/// Orthonormal 1D basis function phi_u(k) for length n.
double dct_basis(int n, int u, int k);

/// Dense square matrix of selected 2D basis functions evaluated at selected
/// sample positions: entries[m][j] = phi_{u_j,v_j}(row_m, col_m).
struct SubTransformMatrix {
  int m = 0;
  std::vector<double> entries;  // row-major, m x m

  double& at(int r, int c) { return entries[static_cast<std::size_t>(r) * m + c]; }
  double at(int r, int c) const { return entries[static_cast<std::size_t>(r) * m + c]; }

  /// Coefficient indices and sample positions in the row-major order used
  /// to build the matrix.
  std::vector<GridPos> coeff_indices;
  std::vector<GridPos> sample_positions;
};

/// Builds the sub-transform matrix for the given coefficient indices and
/// sample positions on an ny x nx grid. Both sets are sorted row-major, so
/// the matrix is reproducible across runs. Throws std::invalid_argument on
/// size mismatch, duplicates or out-of-range indices.
SubTransformMatrix build_subtransform(int ny, int nx,
                                      std::vector<GridPos> coeff_indices,
                                      std::vector<GridPos> sample_positions);

}  // namespace asbsr

#endif  // ASBSR_DCT_HPP_
