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

#ifndef ASBSR_SPECTRAL_HPP_
#define ASBSR_SPECTRAL_HPP_

#include "asbsr/types.hpp"

namespace asbsr {

/// Reconstruction-error budget. Accepts either a mean squared error or an
/// RMSE in gray levels; stored canonically as per-pixel MSE.
class ErrorTarget {
 public:
  static ErrorTarget from_mse(double mse);
  static ErrorTarget from_rmse(double rmse);

  double mse() const { return mse_; }

 private:
  explicit ErrorTarget(double mse) : mse_(mse) {}
  double mse_ = 0.0;
};

/// A spectrum with all coefficients outside some mask set to zero, together
/// with the per-pixel mean squared error of the corresponding image
/// approximation (equal, by Parseval, to the mean of the squared dropped
/// coefficients).
struct BsApproximation {
  Spectrum2D spectrum;
  double mse = 0.0;
};

/// Minimal-area support of the largest coefficients that reconstructs the
/// image within the error budget. Greedy by descending squared magnitude,
/// ties broken in row-major index order; the DC coefficient is always
/// included.
SpectrumMask msed_zone(const Spectrum2D& spectrum, ErrorTarget target);

/// |support| / (nx*ny), in (0, 1].
double sparsity(const SpectrumMask& mask);

/// Zeroes every coefficient outside the mask and reports the resulting
/// per-pixel MSE.
BsApproximation truncate_spectrum(const Spectrum2D& spectrum, const SpectrumMask& mask);

}  // namespace asbsr

#endif  // ASBSR_SPECTRAL_HPP_
