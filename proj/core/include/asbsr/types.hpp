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

#ifndef ASBSR_TYPES_HPP_
#define ASBSR_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace asbsr {

/// 1D signal samples (spatial domain).
using Signal1D = std::vector<double>;

/// 1D transform coefficients; index 0 is the DC component.
using Spectrum1D = std::vector<double>;

/// Dense 2D grid of real-valued pixels, row-major, ny rows by nx columns.
struct Image {
  int ny = 0;
  int nx = 0;
  std::vector<double> pix;

  Image() = default;
  Image(int ny_, int nx_, double fill = 0.0);

  double& at(int r, int c) { return pix[static_cast<std::size_t>(r) * nx + c]; }
  double at(int r, int c) const { return pix[static_cast<std::size_t>(r) * nx + c]; }
  std::size_t size() const { return pix.size(); }
};

/// 2D transform coefficients over the same grid as the originating Image.
/// Index (0,0) is the DC component.
struct Spectrum2D {
  int ny = 0;
  int nx = 0;
  std::vector<double> coef;

  Spectrum2D() = default;
  Spectrum2D(int ny_, int nx_, double fill = 0.0);

  double& at(int u, int v) { return coef[static_cast<std::size_t>(u) * nx + v]; }
  double at(int u, int v) const { return coef[static_cast<std::size_t>(u) * nx + v]; }
  std::size_t size() const { return coef.size(); }
};

/// Boolean support set over spectrum indices.
struct SpectrumMask {
  int ny = 0;
  int nx = 0;
  std::vector<std::uint8_t> on;

  SpectrumMask() = default;
  SpectrumMask(int ny_, int nx_, bool fill = false);

  bool test(int u, int v) const { return on[static_cast<std::size_t>(u) * nx + v] != 0; }
  void set(int u, int v, bool value = true) {
    on[static_cast<std::size_t>(u) * nx + v] = value ? 1 : 0;
  }
  long long count() const;
  double area_fraction() const {
    return static_cast<double>(count()) / (static_cast<double>(ny) * nx);
  }
};

/// A grid coordinate; used both for sample positions (row, col) and for
/// spectrum coefficient indices (u, v).
struct GridPos {
  int row = 0;
  int col = 0;

  friend bool operator==(const GridPos&, const GridPos&) = default;
};

/// Row-major ordering.
inline bool row_major_less(const GridPos& a, const GridPos& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

/// One acquired sample.
struct Sample {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

/// Samples taken from a grid, plus the target grid dimensions.
struct SampleSet {
  int ny = 0;
  int nx = 0;
  std::vector<Sample> samples;
};

namespace detail {
/// Throws std::invalid_argument with the given message when cond is false.
void require(bool cond, const char* msg);
/// Throws std::invalid_argument unless every element is finite.
void require_finite(const std::vector<double>& v, const char* what);
}  // namespace detail

}  // namespace asbsr

#endif  // ASBSR_TYPES_HPP_
