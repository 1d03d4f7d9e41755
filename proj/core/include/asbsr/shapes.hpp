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

#ifndef ASBSR_SHAPES_HPP_
#define ASBSR_SHAPES_HPP_

#include <string>

#include "asbsr/types.hpp"

namespace asbsr {

enum class ShapeFamily { kRectangle, kTriangle, kEllipse, kPieSector };

std::string to_string(ShapeFamily family);
ShapeFamily shape_family_from_string(const std::string& name);

/// A standard spectrum-bounding shape anchored at the DC corner of the
/// spectrum. The x-frequency half-extent is `scale` (fraction of the band in
/// (0, 1]) and the y-frequency half-extent is scale * aspect_ratio. Pie
/// sectors are additionally limited to an angular span, in degrees measured
/// from the x-frequency axis, within [0, 90].
struct ShapeSpec {
  ShapeFamily family = ShapeFamily::kRectangle;
  double scale = 1.0;
  double aspect_ratio = 1.0;
  double angle_lo_deg = 0.0;   // pie sector only
  double angle_hi_deg = 90.0;  // pie sector only
};

/// Rasterizes the shape onto an ny x nx spectrum grid. A cell (u, v) with
/// normalized center coordinates p = (u+0.5)/ny, q = (v+0.5)/nx belongs to
/// the mask when the family membership predicate holds; the DC cell is
/// always included.
SpectrumMask make_mask(const ShapeSpec& spec, int ny, int nx);

/// Finds, by bisection on `scale`, the smallest shape of the given family,
/// aspect ratio and angular span whose rasterized area meets
/// target_fraction from above (it never under-covers the budget). Throws
/// InfeasibleError when even the largest admissible scale falls short.
ShapeSpec fit_shape_to_budget(const ShapeSpec& family_spec, int ny, int nx,
                              double target_fraction);

struct MaskArea {
  long long cells = 0;
  double fraction = 0.0;
};

MaskArea mask_area(const SpectrumMask& mask);

}  // namespace asbsr

#endif  // ASBSR_SHAPES_HPP_
