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

#include "asbsr/dct.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace asbsr {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_pow2(int n) { return n >= 1 && (n & (n - 1)) == 0; }

// Per-length transform plan, built once and cached. For power-of-two
// lengths it holds the twiddle tables of the recursive factorization; for
// other lengths it holds the dense orthonormal cosine matrix.
struct Plan {
  int n = 0;
  bool fast = false;
  double alpha0 = 0.0;  // sqrt(1/n)
  double alphau = 0.0;  // sqrt(2/n)

  // fast path: for each level size s = n, n/2, ..., 2 (indexed by log2),
  // cosines c[i] = cos(pi (2i+1) / (2s)) and their half-secants 1/(2 c[i]).
  std::vector<std::vector<double>> level_cos;
  std::vector<std::vector<double>> level_sec;

  // dense path: forward matrix, row-major, row u = alpha(u) cos(pi (2k+1) u / (2n)).
  std::vector<double> fwd;

  const std::vector<double>& cos_for(int s) const { return level_cos[levelof(s)]; }
  const std::vector<double>& sec_for(int s) const { return level_sec[levelof(s)]; }

  static int levelof(int s) {
    int l = 0;
    while ((1 << l) < s) ++l;
    return l;
  }
};

std::shared_ptr<const Plan> make_plan(int n) {
  auto p = std::make_shared<Plan>();
  p->n = n;
  p->alpha0 = std::sqrt(1.0 / n);
  p->alphau = std::sqrt(2.0 / n);
  p->fast = is_pow2(n) && n >= 2;
  if (p->fast) {
    int levels = Plan::levelof(n) + 1;
    p->level_cos.resize(levels);
    p->level_sec.resize(levels);
    for (int s = n; s >= 2; s /= 2) {
      int h = s / 2;
      auto& cs = p->level_cos[Plan::levelof(s)];
      auto& sc = p->level_sec[Plan::levelof(s)];
      cs.resize(h);
      sc.resize(h);
      for (int i = 0; i < h; ++i) {
        double c = std::cos(kPi * (2.0 * i + 1.0) / (2.0 * s));
        cs[i] = c;
        sc[i] = 1.0 / (2.0 * c);
      }
    }
  } else {
    p->fwd.resize(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u) {
      double a = (u == 0) ? p->alpha0 : p->alphau;
      for (int k = 0; k < n; ++k) {
        p->fwd[static_cast<std::size_t>(u) * n + k] =
            a * std::cos(kPi * (2.0 * k + 1.0) * u / (2.0 * n));
      }
    }
  }
  return p;
}

std::shared_ptr<const Plan> plan_for(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Plan>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto p = make_plan(n);
  cache.emplace(n, p);
  return p;
}

// Recursive split of the unnormalized DCT-II,
//   out[u] = sum_k in[k] cos(pi (2k+1) u / (2n)),
// computed in place in vec; tmp is same-length scratch, clobbered.
void fdct_raw(double* vec, double* tmp, int n, const Plan& plan) {
  if (n == 1) return;
  const int h = n / 2;
  const double* sec = plan.sec_for(n).data();
  for (int i = 0; i < h; ++i) {
    const double x = vec[i];
    const double y = vec[n - 1 - i];
    tmp[i] = x + y;
    tmp[h + i] = (x - y) * sec[i];
  }
  fdct_raw(tmp, vec, h, plan);
  fdct_raw(tmp + h, vec, h, plan);
  for (int i = 0; i < h - 1; ++i) {
    vec[2 * i] = tmp[i];
    vec[2 * i + 1] = tmp[h + i] + tmp[h + i + 1];
  }
  vec[n - 2] = tmp[h - 1];
  vec[n - 1] = tmp[n - 1];
}

// Exact algebraic inverse of fdct_raw.
void idct_raw(double* vec, double* tmp, int n, const Plan& plan) {
  if (n == 1) return;
  const int h = n / 2;
  for (int i = 0; i < h; ++i) tmp[i] = vec[2 * i];
  tmp[n - 1] = vec[n - 1];
  for (int i = h - 2; i >= 0; --i) tmp[h + i] = vec[2 * i + 1] - tmp[h + i + 1];
  idct_raw(tmp, vec, h, plan);
  idct_raw(tmp + h, vec, h, plan);
  const double* cs = plan.cos_for(n).data();
  for (int i = 0; i < h; ++i) {
    const double g = 0.5 * tmp[i];
    const double d = tmp[h + i] * cs[i];
    vec[i] = g + d;
    vec[n - 1 - i] = g - d;
  }
}

// Orthonormal forward transform of vec (length n) using scratch (>= n).
void forward_1d(double* vec, double* scratch, const Plan& plan) {
  const int n = plan.n;
  if (n == 1) return;
  if (plan.fast) {
    fdct_raw(vec, scratch, n, plan);
    vec[0] *= plan.alpha0;
    for (int u = 1; u < n; ++u) vec[u] *= plan.alphau;
  } else {
    const double* m = plan.fwd.data();
    for (int u = 0; u < n; ++u) {
      double acc = 0.0;
      const double* row = m + static_cast<std::size_t>(u) * n;
      for (int k = 0; k < n; ++k) acc += row[k] * vec[k];
      scratch[u] = acc;
    }
    std::copy(scratch, scratch + n, vec);
  }
}

void inverse_1d(double* vec, double* scratch, const Plan& plan) {
  const int n = plan.n;
  if (n == 1) return;
  if (plan.fast) {
    vec[0] /= plan.alpha0;
    for (int u = 1; u < n; ++u) vec[u] /= plan.alphau;
    idct_raw(vec, scratch, n, plan);
  } else {
    // Orthonormal inverse is the transpose of the forward matrix.
    const double* m = plan.fwd.data();
    std::fill(scratch, scratch + n, 0.0);
    for (int u = 0; u < n; ++u) {
      const double g = vec[u];
      if (g == 0.0) continue;
      const double* row = m + static_cast<std::size_t>(u) * n;
      for (int k = 0; k < n; ++k) scratch[k] += row[k] * g;
    }
    std::copy(scratch, scratch + n, vec);
  }
}

// Applies a 1D transform along every row, then every column of the grid.
template <typename Fn>
void transform_2d(std::vector<double>& grid, int ny, int nx,
                  std::vector<double>& scratch, Fn&& apply) {
  const auto rowplan = plan_for(nx);
  const auto colplan = plan_for(ny);
  const std::size_t need = 2 * static_cast<std::size_t>(std::max(nx, ny));
  if (scratch.size() < need) scratch.resize(need);
  double* buf = scratch.data();
  double* tmp = scratch.data() + std::max(nx, ny);

  for (int r = 0; r < ny; ++r) {
    apply(grid.data() + static_cast<std::size_t>(r) * nx, tmp, *rowplan);
  }
  for (int c = 0; c < nx; ++c) {
    for (int r = 0; r < ny; ++r) buf[r] = grid[static_cast<std::size_t>(r) * nx + c];
    apply(buf, tmp, *colplan);
    for (int r = 0; r < ny; ++r) grid[static_cast<std::size_t>(r) * nx + c] = buf[r];
  }
}

void check_signal(const std::vector<double>& v, const char* what) {
  detail::require(!v.empty(), "empty input");
  detail::require_finite(v, what);
}

}  // namespace

Spectrum1D dct1_forward(const Signal1D& signal) {
  check_signal(signal, "signal");
  Spectrum1D out = signal;
  const auto plan = plan_for(static_cast<int>(signal.size()));
  std::vector<double> scratch(signal.size());
  forward_1d(out.data(), scratch.data(), *plan);
  return out;
}

Signal1D dct1_inverse(const Spectrum1D& spectrum) {
  check_signal(spectrum, "spectrum");
  Signal1D out = spectrum;
  const auto plan = plan_for(static_cast<int>(spectrum.size()));
  std::vector<double> scratch(spectrum.size());
  inverse_1d(out.data(), scratch.data(), *plan);
  return out;
}

Spectrum2D dct2_forward(const Image& image) {
  detail::require(image.ny >= 1 && image.nx >= 1, "empty image");
  detail::require_finite(image.pix, "image");
  Spectrum2D out;
  out.ny = image.ny;
  out.nx = image.nx;
  out.coef = image.pix;
  std::vector<double> scratch;
  dct2_forward_inplace(out.coef, out.ny, out.nx, scratch);
  return out;
}

Image dct2_inverse(const Spectrum2D& spectrum) {
  detail::require(spectrum.ny >= 1 && spectrum.nx >= 1, "empty spectrum");
  detail::require_finite(spectrum.coef, "spectrum");
  Image out;
  out.ny = spectrum.ny;
  out.nx = spectrum.nx;
  out.pix = spectrum.coef;
  std::vector<double> scratch;
  dct2_inverse_inplace(out.pix, out.ny, out.nx, scratch);
  return out;
}

void dct2_forward_inplace(std::vector<double>& grid, int ny, int nx,
                          std::vector<double>& scratch) {
  transform_2d(grid, ny, nx, scratch,
               [](double* v, double* t, const Plan& p) { forward_1d(v, t, p); });
}

void dct2_inverse_inplace(std::vector<double>& grid, int ny, int nx,
                          std::vector<double>& scratch) {
  transform_2d(grid, ny, nx, scratch,
               [](double* v, double* t, const Plan& p) { inverse_1d(v, t, p); });
}

double dct_basis(int n, int u, int k) {
  detail::require(n >= 1 && u >= 0 && u < n && k >= 0 && k < n,
                  "dct_basis index out of range");
  double a = (u == 0) ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
  return a * std::cos(kPi * (2.0 * k + 1.0) * u / (2.0 * n));
}

SubTransformMatrix build_subtransform(int ny, int nx,
                                      std::vector<GridPos> coeff_indices,
                                      std::vector<GridPos> sample_positions) {
  detail::require(ny >= 1 && nx >= 1, "grid dimensions must be at least 1x1");
  detail::require(coeff_indices.size() == sample_positions.size(),
                  "coefficient and sample counts must match");
  detail::require(!coeff_indices.empty(), "sub-transform must have at least one entry");

  auto prepare = [&](std::vector<GridPos>& v, const char* what) {
    for (const GridPos& p : v) {
      if (p.row < 0 || p.row >= ny || p.col < 0 || p.col >= nx) {
        throw std::invalid_argument(std::string(what) + " index out of range");
      }
    }
    std::sort(v.begin(), v.end(), row_major_less);
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
      throw std::invalid_argument(std::string(what) + " contains duplicates");
    }
  };
  prepare(coeff_indices, "coefficient");
  prepare(sample_positions, "sample position");

  const int m = static_cast<int>(coeff_indices.size());
  SubTransformMatrix out;
  out.m = m;
  out.entries.resize(static_cast<std::size_t>(m) * m);
  // 2D basis separates into the product of two 1D basis values.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      out.entries[static_cast<std::size_t>(i) * m + j] =
          dct_basis(ny, coeff_indices[j].row, sample_positions[i].row) *
          dct_basis(nx, coeff_indices[j].col, sample_positions[i].col);
    }
  }
  out.coeff_indices = std::move(coeff_indices);
  out.sample_positions = std::move(sample_positions);
  return out;
}

}  // namespace asbsr
