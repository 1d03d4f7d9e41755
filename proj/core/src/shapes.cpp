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

#include "asbsr/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asbsr/errors.hpp"

namespace asbsr {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_spec(const ShapeSpec& spec) {
  detail::require(spec.scale > 0.0, "shape scale must be positive");
  detail::require(spec.aspect_ratio > 0.0, "shape aspect ratio must be positive");
  detail::require(spec.scale <= 1.0 && spec.scale * spec.aspect_ratio <= 1.0,
                  "shape does not fit the band: scale and scale*aspect_ratio must be <= 1");
  if (spec.family == ShapeFamily::kPieSector) {
    detail::require(spec.angle_lo_deg >= 0.0 && spec.angle_hi_deg <= 90.0 &&
                        spec.angle_lo_deg <= spec.angle_hi_deg,
                    "pie sector angular span must be ordered within [0, 90] degrees");
  }
}

bool member(const ShapeSpec& spec, double p, double q) {
  const double a = spec.scale;                      // half-extent along q (x-frequency)
  const double b = spec.scale * spec.aspect_ratio;  // half-extent along p (y-frequency)
  switch (spec.family) {
    case ShapeFamily::kRectangle:
      return q < a && p < b;
    case ShapeFamily::kTriangle:
      return q / a + p / b <= 1.0;
    case ShapeFamily::kEllipse: {
      const double x = q / a, y = p / b;
      return x * x + y * y <= 1.0;
    }
    case ShapeFamily::kPieSector: {
      const double x = q / a, y = p / b;
      if (x * x + y * y > 1.0) return false;
      const double ang = std::atan2(y, x) * 180.0 / kPi;
      return ang >= spec.angle_lo_deg && ang <= spec.angle_hi_deg;
    }
  }
  return false;
}

}  // namespace

std::string to_string(ShapeFamily family) {
  switch (family) {
    case ShapeFamily::kRectangle: return "rectangle";
    case ShapeFamily::kTriangle: return "triangle";
    case ShapeFamily::kEllipse: return "ellipse";
    case ShapeFamily::kPieSector: return "pie_sector";
  }
  return "rectangle";
}

ShapeFamily shape_family_from_string(const std::string& name) {
  if (name == "rectangle") return ShapeFamily::kRectangle;
  if (name == "triangle") return ShapeFamily::kTriangle;
  if (name == "ellipse") return ShapeFamily::kEllipse;
  if (name == "pie_sector") return ShapeFamily::kPieSector;
  throw std::invalid_argument("unknown shape family: " + name);
}

SpectrumMask make_mask(const ShapeSpec& spec, int ny, int nx) {
  detail::require(ny >= 1 && nx >= 1, "mask dimensions must be at least 1x1");
  validate_spec(spec);

  SpectrumMask mask(ny, nx, false);
  for (int u = 0; u < ny; ++u) {
    const double p = (u + 0.5) / ny;
    for (int v = 0; v < nx; ++v) {
      const double q = (v + 0.5) / nx;
      if (member(spec, p, q)) mask.set(u, v);
    }
  }
  mask.set(0, 0);
  return mask;
}

ShapeSpec fit_shape_to_budget(const ShapeSpec& family_spec, int ny, int nx,
                              double target_fraction) {
  detail::require(ny >= 1 && nx >= 1, "mask dimensions must be at least 1x1");
  detail::require(family_spec.aspect_ratio > 0.0, "shape aspect ratio must be positive");
  const double total = static_cast<double>(ny) * nx;
  detail::require(target_fraction >= 1.0 / total && target_fraction <= 1.0,
                  "target fraction must lie in [1/(nx*ny), 1]");

  ShapeSpec spec = family_spec;
  const double scale_max = std::min(1.0, 1.0 / family_spec.aspect_ratio);

  auto fraction_at = [&](double s) {
    spec.scale = s;
    return make_mask(spec, ny, nx).area_fraction();
  };

  if (fraction_at(scale_max) < target_fraction) {
    throw InfeasibleError("shape family cannot reach the target fraction " +
                          std::to_string(target_fraction) + " within the band");
  }

  // Smallest scale whose area meets the target from above. The area is a
  // non-decreasing step function of scale, so plain bisection brackets the
  // crossing; 60 halvings put the bracket far below cell granularity.
  double lo = 0.0, hi = scale_max;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (fraction_at(mid) >= target_fraction) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  spec.scale = hi;
  return spec;
}

MaskArea mask_area(const SpectrumMask& mask) {
  detail::require(mask.ny >= 1 && mask.nx >= 1, "empty mask");
  MaskArea out;
  out.cells = mask.count();
  out.fraction = mask.area_fraction();
  return out;
}

}  // namespace asbsr
