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

#include <cmath>
#include <stdexcept>

#include "asbsr/errors.hpp"
#include "asbsr/shapes.hpp"
#include "doctest.h"

using namespace asbsr;

namespace {

ShapeSpec shape(ShapeFamily f, double scale, double aspect = 1.0) {
  ShapeSpec s;
  s.family = f;
  s.scale = scale;
  s.aspect_ratio = aspect;
  return s;
}

bool subset_of(const SpectrumMask& a, const SpectrumMask& b) {
  for (std::size_t i = 0; i < a.on.size(); ++i) {
    if (a.on[i] && !b.on[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("full-band rectangle covers everything") {
  const SpectrumMask m = make_mask(shape(ShapeFamily::kRectangle, 1.0), 32, 48);
  CHECK(mask_area(m).fraction == doctest::Approx(1.0));
}

TEST_CASE("half-scale rectangle covers a quarter of the band") {
  const SpectrumMask m = make_mask(shape(ShapeFamily::kRectangle, 0.5), 512, 512);
  CHECK(std::fabs(mask_area(m).fraction - 0.25) <= 2.0 / 512.0);
}

TEST_CASE("unit triangle covers half of the band") {
  const SpectrumMask m = make_mask(shape(ShapeFamily::kTriangle, 1.0), 256, 256);
  CHECK(std::fabs(mask_area(m).fraction - 0.5) <= 0.01);
}

TEST_CASE("every mask includes the DC cell") {
  for (ShapeFamily f : {ShapeFamily::kRectangle, ShapeFamily::kTriangle, ShapeFamily::kEllipse,
                        ShapeFamily::kPieSector}) {
    const SpectrumMask m = make_mask(shape(f, 0.01), 64, 64);
    CHECK(m.test(0, 0));
  }
}

TEST_CASE("mask area grows monotonically with scale and masks nest") {
  for (ShapeFamily f : {ShapeFamily::kTriangle, ShapeFamily::kEllipse, ShapeFamily::kPieSector}) {
    double prev = 0.0;
    SpectrumMask prev_mask(48, 48, false);
    for (double s : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
      const SpectrumMask m = make_mask(shape(f, s, 0.8), 48, 48);
      const double fr = mask_area(m).fraction;
      CHECK(fr >= prev);
      CHECK(subset_of(prev_mask, m));
      prev = fr;
      prev_mask = m;
    }
  }
}

TEST_CASE("pie sector angular span carves a wedge of the ellipse") {
  ShapeSpec full = shape(ShapeFamily::kPieSector, 0.8);
  ShapeSpec wedge = full;
  wedge.angle_lo_deg = 0.0;
  wedge.angle_hi_deg = 30.0;
  const SpectrumMask m_full = make_mask(full, 64, 64);
  const SpectrumMask m_wedge = make_mask(wedge, 64, 64);
  const SpectrumMask m_ell = make_mask(shape(ShapeFamily::kEllipse, 0.8), 64, 64);
  CHECK(subset_of(m_wedge, m_full));
  // a pie sector over the whole quadrant equals the ellipse
  CHECK(mask_area(m_full).cells == mask_area(m_ell).cells);
  CHECK(mask_area(m_wedge).cells < mask_area(m_full).cells);
}

TEST_CASE("make_mask validates the spec") {
  CHECK_THROWS_AS(make_mask(shape(ShapeFamily::kEllipse, 0.0), 8, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_mask(shape(ShapeFamily::kEllipse, 0.8, 2.0), 8, 8),
                  std::invalid_argument);
  ShapeSpec bad = shape(ShapeFamily::kPieSector, 0.5);
  bad.angle_lo_deg = 50.0;
  bad.angle_hi_deg = 20.0;
  CHECK_THROWS_AS(make_mask(bad, 8, 8), std::invalid_argument);
}

TEST_CASE("fitting a rectangle to a quarter budget lands on half scale") {
  const ShapeSpec fitted =
      fit_shape_to_budget(shape(ShapeFamily::kRectangle, 1.0), 512, 512, 0.25);
  CHECK(fitted.scale == doctest::Approx(0.5).epsilon(0.01));
  const double fr = mask_area(make_mask(fitted, 512, 512)).fraction;
  CHECK(fr >= 0.25 - 1.0 / (512.0 * 512.0));
  CHECK(fr <= 0.25 + 0.001 + 2e-3);  // rectangle columns enter a full side at a time
}

TEST_CASE("fitting an ellipse recovers the continuum quarter-circle area") {
  const double target = 3.14159265358979323846 / 16.0;  // quarter ellipse, a = b = 0.5
  const ShapeSpec fitted =
      fit_shape_to_budget(shape(ShapeFamily::kEllipse, 1.0), 1024, 1024, target);
  CHECK(fitted.scale == doctest::Approx(0.5).epsilon(0.01));
  const double fr = mask_area(make_mask(fitted, 1024, 1024)).fraction;
  CHECK(fr >= target - 1.0 / (1024.0 * 1024.0));
  CHECK(fr <= target + 0.001);
}

TEST_CASE("fitting to the minimal budget yields the DC-only mask") {
  for (ShapeFamily f : {ShapeFamily::kRectangle, ShapeFamily::kEllipse}) {
    const ShapeSpec fitted = fit_shape_to_budget(shape(f, 1.0), 16, 16, 1.0 / 256.0);
    const SpectrumMask m = make_mask(fitted, 16, 16);
    CHECK(mask_area(m).cells == 1);
    CHECK(m.test(0, 0));
  }
}

TEST_CASE("an oval fitted to fraction 0.505 lands within cell tolerance") {
  const ShapeSpec fitted =
      fit_shape_to_budget(shape(ShapeFamily::kEllipse, 1.0), 512, 512, 0.505);
  const long long cells = mask_area(make_mask(fitted, 512, 512)).cells;
  CHECK(cells >= 132383 - 262);
  CHECK(cells <= 132383 + 262);
}

TEST_CASE("infeasible budgets raise InfeasibleError") {
  // aspect 10 caps the scale at 0.1: a rectangle can cover at most 10% of
  // the band.
  CHECK_THROWS_AS(fit_shape_to_budget(shape(ShapeFamily::kRectangle, 1.0, 10.0), 64, 64, 0.5),
                  InfeasibleError);
}

TEST_CASE("fit never under-covers the budget") {
  for (double target : {0.05, 0.19, 0.3, 0.62}) {
    const ShapeSpec fitted =
        fit_shape_to_budget(shape(ShapeFamily::kPieSector, 1.0, 0.9), 96, 128, target);
    const double fr = mask_area(make_mask(fitted, 96, 128)).fraction;
    CHECK(fr >= target - 1.0 / (96.0 * 128.0));
    CHECK(fr <= target + std::max(1.0 / (96.0 * 128.0), 0.001) + 1e-12);
  }
}

TEST_CASE("mask_area counts cells exactly") {
  CHECK(mask_area(SpectrumMask(8, 8, true)).cells == 64);
  CHECK(mask_area(SpectrumMask(8, 8, true)).fraction == doctest::Approx(1.0));
  SpectrumMask dc(8, 8, false);
  dc.set(0, 0);
  CHECK(mask_area(dc).cells == 1);
  CHECK(mask_area(dc).fraction == doctest::Approx(1.0 / 64.0));
}
