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

#include "asbsr/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "asbsr/dct.hpp"
#include "asbsr/errors.hpp"
#include "asbsr/linalg.hpp"

namespace asbsr {

namespace {

void validate_samples(const SampleSet& samples) {
  detail::require(samples.ny >= 1 && samples.nx >= 1, "sample set has empty dimensions");
  detail::require(!samples.samples.empty(), "sample set is empty");
  for (const Sample& s : samples.samples) {
    detail::require(s.row >= 0 && s.row < samples.ny && s.col >= 0 && s.col < samples.nx,
                    "sample position out of range");
  }
}

// Exact nearest-sampled-position interpolation. Phase 1 finds, per column,
// the closest sampled row; phase 2 scans the per-column results along each
// row. Comparison key (distance^2, row, col) fixes the tie order.
Image nearest_neighbor_fill(const SampleSet& samples) {
  const int ny = samples.ny, nx = samples.nx;
  Image out(ny, nx, 0.0);

  constexpr int kNone = -1;
  // nearest sampled row in column c at row r, preferring the smaller row on
  // equidistant candidates; computed by a down sweep and an up sweep.
  std::vector<int> near_row(static_cast<std::size_t>(ny) * nx, kNone);
  std::vector<double> value(static_cast<std::size_t>(ny) * nx, 0.0);
  std::vector<std::uint8_t> has(static_cast<std::size_t>(ny) * nx, 0);
  for (const Sample& s : samples.samples) {
    const std::size_t i = static_cast<std::size_t>(s.row) * nx + s.col;
    has[i] = 1;
    value[i] = s.value;
    out.at(s.row, s.col) = s.value;
  }

  std::vector<int> cols_with_samples;
  {
    std::vector<std::uint8_t> col_has(nx, 0);
    for (const Sample& s : samples.samples) col_has[s.col] = 1;
    for (int c = 0; c < nx; ++c) {
      if (col_has[c]) cols_with_samples.push_back(c);
    }
  }

  for (int c : cols_with_samples) {
    int last = kNone;
    for (int r = 0; r < ny; ++r) {
      if (has[static_cast<std::size_t>(r) * nx + c]) last = r;
      near_row[static_cast<std::size_t>(r) * nx + c] = last;
    }
    last = kNone;
    for (int r = ny - 1; r >= 0; --r) {
      if (has[static_cast<std::size_t>(r) * nx + c]) last = r;
      int& cur = near_row[static_cast<std::size_t>(r) * nx + c];
      if (cur == kNone) {
        cur = last;
      } else if (last != kNone) {
        const int da = r - cur;   // distance to the nearest row above (or self)
        const int db = last - r;  // distance to the nearest row below
        if (db < da) cur = last;  // on a tie the smaller row (cur) wins
      }
    }
  }

  for (int r = 0; r < ny; ++r) {
    for (int c = 0; c < nx; ++c) {
      if (has[static_cast<std::size_t>(r) * nx + c]) continue;
      long long best_d2 = std::numeric_limits<long long>::max();
      int best_row = -1, best_col = -1;
      for (int cc : cols_with_samples) {
        const int rr = near_row[static_cast<std::size_t>(r) * nx + cc];
        const long long dr = rr - r;
        const long long dc = cc - c;
        const long long d2 = dr * dr + dc * dc;
        if (d2 < best_d2 || (d2 == best_d2 && (rr < best_row || (rr == best_row && cc < best_col)))) {
          best_d2 = d2;
          best_row = rr;
          best_col = cc;
        }
      }
      out.at(r, c) = value[static_cast<std::size_t>(best_row) * nx + best_col];
    }
  }
  return out;
}

double sample_rms_mismatch(const Image& estimate, const SampleSet& samples) {
  double acc = 0.0;
  for (const Sample& s : samples.samples) {
    const double d = estimate.at(s.row, s.col) - s.value;
    acc += d * d;
  }
  return std::sqrt(acc / samples.samples.size());
}

}  // namespace

std::string to_string(InitMethod method) {
  return method == InitMethod::kZeroFill ? "zero_fill" : "nearest_neighbor";
}

InitMethod init_method_from_string(const std::string& name) {
  if (name == "zero_fill") return InitMethod::kZeroFill;
  if (name == "nearest_neighbor") return InitMethod::kNearestNeighbor;
  throw std::invalid_argument("unknown init method: " + name);
}

Image interpolate_initial(const SampleSet& samples, InitMethod method) {
  validate_samples(samples);
  if (method == InitMethod::kZeroFill) {
    Image out(samples.ny, samples.nx, 0.0);
    for (const Sample& s : samples.samples) out.at(s.row, s.col) = s.value;
    return out;
  }
  return nearest_neighbor_fill(samples);
}

IterativeResult iterative_reconstruct(const SampleSet& samples, const SpectrumMask& mask,
                                      const IterConfig& cfg, const Image* truth) {
  validate_samples(samples);
  detail::require(mask.ny == samples.ny && mask.nx == samples.nx,
                  "mask dimensions must match the sample grid");
  detail::require(mask.count() >= 1, "mask must contain at least one cell");
  detail::require(cfg.max_iters >= 1, "max_iters must be at least 1");
  detail::require(cfg.rel_tol >= 0.0, "rel_tol must be non-negative");
  if (truth != nullptr) {
    detail::require(truth->ny == samples.ny && truth->nx == samples.nx,
                    "truth dimensions must match the sample grid");
  }

  IterativeResult result;
  result.image = interpolate_initial(samples, cfg.init);
  ReconstructionReport& rep = result.report;

  const int ny = samples.ny, nx = samples.nx;
  std::vector<double> scratch;
  double prev_residual = std::numeric_limits<double>::infinity();

  for (int it = 0; it < cfg.max_iters; ++it) {
    dct2_forward_inplace(result.image.pix, ny, nx, scratch);
    for (std::size_t i = 0; i < result.image.pix.size(); ++i) {
      if (!mask.on[i]) result.image.pix[i] = 0.0;
    }
    dct2_inverse_inplace(result.image.pix, ny, nx, scratch);

    const double residual = sample_rms_mismatch(result.image, samples);
    for (const Sample& s : samples.samples) result.image.at(s.row, s.col) = s.value;

    rep.residual.push_back(residual);
    if (truth != nullptr) {
      const ErrorMetrics em = error_metrics(result.image, *truth);
      rep.rmse_vs_truth.push_back(em.rmse);
      rep.rmse_trimmed90.push_back(em.trimmed90);
    }
    rep.iterations_run = it + 1;
    rep.final_residual = residual;

    if (residual == 0.0 ||
        (std::isfinite(prev_residual) &&
         std::fabs(prev_residual - residual) <= cfg.rel_tol * std::max(prev_residual, 1e-300))) {
      rep.converged = true;
      break;
    }
    prev_residual = residual;
  }
  return result;
}

Image direct_reconstruct(const SampleSet& samples, const std::vector<GridPos>& coeff_indices,
                         const DirectOptions& opts) {
  validate_samples(samples);
  detail::require(coeff_indices.size() == samples.samples.size(),
                  "coefficient count must equal the sample count");
  detail::require(static_cast<int>(samples.samples.size()) <= opts.max_system_size,
                  "system size exceeds the direct-path guardrail");

  std::vector<GridPos> positions;
  positions.reserve(samples.samples.size());
  for (const Sample& s : samples.samples) positions.push_back({s.row, s.col});

  SubTransformMatrix sub =
      build_subtransform(samples.ny, samples.nx, coeff_indices, positions);

  // Right-hand side follows the row-major position order used by the matrix.
  std::vector<double> rhs(sub.m);
  {
    Image grid(samples.ny, samples.nx, 0.0);
    for (const Sample& s : samples.samples) grid.at(s.row, s.col) = s.value;
    for (int i = 0; i < sub.m; ++i) {
      rhs[i] = grid.at(sub.sample_positions[i].row, sub.sample_positions[i].col);
    }
  }

  LuSolver lu(sub.entries, sub.m);
  const double cond = lu.condition_estimate();
  if (!(cond < opts.condition_limit)) {
    throw SingularSystemError(
        "sample positions give an ill-conditioned sub-transform (condition estimate " +
        std::to_string(cond) + ")");
  }
  const std::vector<double> coef = lu.solve(rhs);

  Spectrum2D spectrum(samples.ny, samples.nx, 0.0);
  for (int j = 0; j < sub.m; ++j) {
    spectrum.at(sub.coeff_indices[j].row, sub.coeff_indices[j].col) = coef[j];
  }
  return dct2_inverse(spectrum);
}

ErrorMetrics error_metrics(const Image& reconstructed, const Image& truth) {
  detail::require(reconstructed.ny == truth.ny && reconstructed.nx == truth.nx,
                  "image dimensions must match");
  const std::size_t n = truth.size();
  std::vector<double> abs_err(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = reconstructed.pix[i] - truth.pix[i];
    acc += d * d;
    abs_err[i] = std::fabs(d);
  }
  ErrorMetrics em;
  em.rmse = std::sqrt(acc / static_cast<double>(n));

  const std::size_t keep = 9 * n / 10;
  if (keep == 0) {
    em.trimmed90 = 0.0;
    return em;
  }
  std::nth_element(abs_err.begin(), abs_err.begin() + (keep - 1), abs_err.end());
  double acc90 = 0.0;
  for (std::size_t i = 0; i < keep; ++i) acc90 += abs_err[i] * abs_err[i];
  em.trimmed90 = std::sqrt(acc90 / static_cast<double>(keep));
  return em;
}

}  // namespace asbsr
