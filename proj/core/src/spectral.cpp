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

#include "asbsr/spectral.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace asbsr {

ErrorTarget ErrorTarget::from_mse(double mse) {
  detail::require(mse >= 0.0, "error target must be non-negative");
  return ErrorTarget(mse);
}

ErrorTarget ErrorTarget::from_rmse(double rmse) {
  detail::require(rmse >= 0.0, "error target must be non-negative");
  return ErrorTarget(rmse * rmse);
}

SpectrumMask msed_zone(const Spectrum2D& spectrum, ErrorTarget target) {
  detail::require(spectrum.ny >= 1 && spectrum.nx >= 1, "empty spectrum");
  const std::size_t n = spectrum.size();
  const double npix = static_cast<double>(n);

  // Flattened indices ordered by descending energy, DC pinned first;
  // equal-energy ties keep row-major order (stable sort over ascending index).
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (a == 0) return b != 0;
    if (b == 0) return false;
    const double ea = spectrum.coef[a] * spectrum.coef[a];
    const double eb = spectrum.coef[b] * spectrum.coef[b];
    return ea > eb;
  });

  // suffix[i] = energy left out when the first i entries of `order` are kept.
  // Summed smallest-first so the tail is accurate near zero.
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    const double c = spectrum.coef[order[i]];
    suffix[i] = suffix[i + 1] + c * c;
  }

  std::size_t keep = 1;  // DC is always kept
  while (keep < n && suffix[keep] / npix > target.mse()) ++keep;

  SpectrumMask mask(spectrum.ny, spectrum.nx, false);
  for (std::size_t i = 0; i < keep; ++i) mask.on[order[i]] = 1;
  return mask;
}

double sparsity(const SpectrumMask& mask) {
  detail::require(mask.ny >= 1 && mask.nx >= 1, "empty mask");
  detail::require(mask.count() >= 1, "mask must contain at least one cell");
  return mask.area_fraction();
}

BsApproximation truncate_spectrum(const Spectrum2D& spectrum, const SpectrumMask& mask) {
  detail::require(spectrum.ny == mask.ny && spectrum.nx == mask.nx,
                  "spectrum and mask dimensions must match");
  BsApproximation out;
  out.spectrum = spectrum;
  double dropped = 0.0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (!mask.on[i]) {
      dropped += spectrum.coef[i] * spectrum.coef[i];
      out.spectrum.coef[i] = 0.0;
    }
  }
  out.mse = dropped / static_cast<double>(spectrum.size());
  return out;
}

}  // namespace asbsr
