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

#include "asbsr/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace asbsr {

Image::Image(int ny_, int nx_, double fill)
    : ny(ny_), nx(nx_), pix(static_cast<std::size_t>(ny_) * nx_, fill) {
  detail::require(ny_ >= 1 && nx_ >= 1, "Image dimensions must be at least 1x1");
}

Spectrum2D::Spectrum2D(int ny_, int nx_, double fill)
    : ny(ny_), nx(nx_), coef(static_cast<std::size_t>(ny_) * nx_, fill) {
  detail::require(ny_ >= 1 && nx_ >= 1, "Spectrum2D dimensions must be at least 1x1");
}

SpectrumMask::SpectrumMask(int ny_, int nx_, bool fill)
    : ny(ny_), nx(nx_), on(static_cast<std::size_t>(ny_) * nx_, fill ? 1 : 0) {
  detail::require(ny_ >= 1 && nx_ >= 1, "SpectrumMask dimensions must be at least 1x1");
}

long long SpectrumMask::count() const {
  long long n = 0;
  for (std::uint8_t v : on) n += (v != 0);
  return n;
}

namespace detail {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(what) + " contains a non-finite value");
    }
  }
}

}  // namespace detail

}  // namespace asbsr
