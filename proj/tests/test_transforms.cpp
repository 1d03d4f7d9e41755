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
#include <vector>

#include "asbsr/dct.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace asbsr;
using namespace asbsr_test;

TEST_CASE("dct1_forward of a constant signal keeps only the DC term") {
  for (int n : {1, 2, 5, 16, 33}) {
    const double c = 3.25;
    Spectrum1D g = dct1_forward(Signal1D(n, c));
    CHECK(g[0] == doctest::Approx(c * std::sqrt(static_cast<double>(n))).epsilon(1e-12));
    for (int u = 1; u < n; ++u) CHECK(std::fabs(g[u]) < 1e-12 * n);
  }
}

TEST_CASE("dct1 on a length-1 signal is the identity") {
  CHECK(dct1_forward({4.5})[0] == doctest::Approx(4.5));
  CHECK(dct1_inverse({4.5})[0] == doctest::Approx(4.5));
}

TEST_CASE("dct1_forward matches the dense cosine-matrix oracle") {
  Rng rng(101);
  for (int n = 1; n <= 64; ++n) {
    const Signal1D x = random_vector(rng, n);
    CHECK(max_abs_diff(dct1_forward(x), oracle_dct1_forward(x)) < 1e-12);
  }
  // a couple of non-power-of-two larger sizes
  for (int n : {96, 511}) {
    const Signal1D x = random_vector(rng, n);
    CHECK(max_abs_diff(dct1_forward(x), oracle_dct1_forward(x)) < 1e-11);
  }
}

TEST_CASE("dct1_inverse undoes dct1_forward") {
  Rng rng(102);
  for (int n : {2, 3, 7, 64, 100, 511, 512}) {
    const Signal1D x = random_vector(rng, n);
    CHECK(rel_err(dct1_inverse(dct1_forward(x)), x) < 1e-10);
  }
}

TEST_CASE("a single unit coefficient reconstructs its basis function") {
  const int n = 16;
  for (int u : {0, 1, 7, 15}) {
    Spectrum1D g(n, 0.0);
    g[u] = 1.0;
    const Signal1D x = dct1_inverse(g);
    for (int k = 0; k < n; ++k) {
      CHECK(x[k] == doctest::Approx(dct_basis(n, u, k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("dct1 spectrum of [c*sqrt(N),0,...] is the constant signal") {
  const int n = 12;
  Spectrum1D g(n, 0.0);
  g[0] = 2.0 * std::sqrt(static_cast<double>(n));
  const Signal1D x = dct1_inverse(g);
  for (double v : x) CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("dct1 rejects empty and non-finite input") {
  CHECK_THROWS_AS(dct1_forward({}), std::invalid_argument);
  CHECK_THROWS_AS(dct1_inverse({}), std::invalid_argument);
  CHECK_THROWS_AS(dct1_forward({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("dct1 properties: Parseval and linearity") {
  Rng rng(103);
  for (int n : {1, 2, 9, 31, 64, 128, 257}) {
    const Signal1D x = random_vector(rng, n);
    const Signal1D y = random_vector(rng, n);
    const Spectrum1D gx = dct1_forward(x);
    const Spectrum1D gy = dct1_forward(y);

    double ex = 0.0, eg = 0.0;
    for (int i = 0; i < n; ++i) {
      ex += x[i] * x[i];
      eg += gx[i] * gx[i];
    }
    CHECK(std::fabs(ex - eg) <= 1e-9 * std::max(ex, 1.0));

    Signal1D z(n);
    for (int i = 0; i < n; ++i) z[i] = 2.5 * x[i] - 0.75 * y[i];
    const Spectrum1D gz = dct1_forward(z);
    for (int i = 0; i < n; ++i) {
      CHECK(gz[i] == doctest::Approx(2.5 * gx[i] - 0.75 * gy[i]).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("dct2_forward of a constant image is a lone DC coefficient") {
  const int ny = 6, nx = 9;
  const double c = 1.5;
  const Spectrum2D g = dct2_forward(Image(ny, nx, c));
  CHECK(g.at(0, 0) == doctest::Approx(c * std::sqrt(static_cast<double>(nx) * ny)));
  double off = 0.0;
  for (std::size_t i = 1; i < g.size(); ++i) off = std::max(off, std::fabs(g.coef[i]));
  CHECK(off < 1e-12 * nx * ny);
}

TEST_CASE("dct2_forward matches the flattened Kronecker oracle on 4x4") {
  Rng rng(104);
  const Image img = random_image(rng, 4, 4);
  const Spectrum2D got = dct2_forward(img);
  const Spectrum2D want = oracle_dct2_forward(img);
  CHECK(max_abs_diff(got.coef, want.coef) < 1e-12);
}

TEST_CASE("dct2 is separable over outer products") {
  Rng rng(105);
  const int ny = 8, nx = 12;
  const Signal1D a = random_vector(rng, ny);
  const Signal1D b = random_vector(rng, nx);
  Image img(ny, nx, 0.0);
  for (int r = 0; r < ny; ++r) {
    for (int c = 0; c < nx; ++c) img.at(r, c) = a[r] * b[c];
  }
  const Spectrum2D g = dct2_forward(img);
  const Spectrum1D ga = dct1_forward(a);
  const Spectrum1D gb = dct1_forward(b);
  for (int u = 0; u < ny; ++u) {
    for (int v = 0; v < nx; ++v) {
      CHECK(g.at(u, v) == doctest::Approx(ga[u] * gb[v]).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("dct2_inverse: zero spectrum, round trips and unit coefficients") {
  CHECK(max_abs_diff(dct2_inverse(Spectrum2D(3, 4, 0.0)).pix, Image(3, 4, 0.0).pix) == 0.0);

  Rng rng(106);
  for (auto [ny, nx] : {std::pair{3, 5}, std::pair{64, 64}, std::pair{17, 32}}) {
    const Image img = random_image(rng, ny, nx);
    CHECK(rel_err(dct2_inverse(dct2_forward(img)).pix, img.pix) < 1e-10);

    double ei = 0.0, eg = 0.0;
    const Spectrum2D g = dct2_forward(img);
    for (std::size_t i = 0; i < img.size(); ++i) {
      ei += img.pix[i] * img.pix[i];
      eg += g.coef[i] * g.coef[i];
    }
    CHECK(std::fabs(ei - eg) <= 1e-9 * ei);
  }

  const int ny = 8, nx = 6;
  Spectrum2D g(ny, nx, 0.0);
  g.at(3, 2) = 1.0;
  const Image img = dct2_inverse(g);
  for (int r = 0; r < ny; ++r) {
    for (int c = 0; c < nx; ++c) {
      CHECK(img.at(r, c) ==
            doctest::Approx(dct_basis(ny, 3, r) * dct_basis(nx, 2, c)).epsilon(1e-12));
    }
  }
}

TEST_CASE("build_subtransform on a single point is the identity") {
  const SubTransformMatrix m = build_subtransform(1, 1, {{0, 0}}, {{0, 0}});
  CHECK(m.m == 1);
  CHECK(m.entries[0] == doctest::Approx(1.0));
}

TEST_CASE("build_subtransform with every index reproduces the orthonormal transform") {
  const int n = 8;
  std::vector<GridPos> coeffs, pos;
  for (int i = 0; i < n; ++i) {
    coeffs.push_back({0, i});
    pos.push_back({0, i});
  }
  const SubTransformMatrix m = build_subtransform(1, n, coeffs, pos);
  // M^T M = I
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += m.at(k, i) * m.at(k, j);
      CHECK(acc == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("build_subtransform entries match direct basis evaluation") {
  // dims (1,8), coefficients {(0,0),(0,3)}, positions {(0,1),(0,5)}
  const SubTransformMatrix m = build_subtransform(1, 8, {{0, 0}, {0, 3}}, {{0, 1}, {0, 5}});
  const double a0 = std::sqrt(1.0 / 8.0);
  const double a3 = std::sqrt(2.0 / 8.0);
  CHECK(m.at(0, 0) == doctest::Approx(a0));
  CHECK(m.at(0, 1) == doctest::Approx(a3 * std::cos(kPi * 3.0 * 3.0 / 16.0)));
  CHECK(m.at(1, 0) == doctest::Approx(a0));
  CHECK(m.at(1, 1) == doctest::Approx(a3 * std::cos(kPi * 11.0 * 3.0 / 16.0)));
}

TEST_CASE("build_subtransform validates its inputs") {
  CHECK_THROWS_AS(build_subtransform(1, 8, {{0, 0}}, {{0, 1}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_subtransform(1, 8, {{0, 9}}, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_subtransform(1, 8, {{0, 1}, {0, 1}}, {{0, 1}, {0, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_subtransform(1, 8, {{0, 1}, {0, 2}}, {{0, 3}, {0, 3}}),
                  std::invalid_argument);
}

TEST_CASE("2D transforms handle single-row and single-column grids") {
  Rng rng(108);
  for (auto [ny, nx] : {std::pair{1, 37}, std::pair{53, 1}, std::pair{1, 1}}) {
    const Image img = random_image(rng, ny, nx);
    const Spectrum2D g = dct2_forward(img);
    CHECK(rel_err(dct2_inverse(g).pix, img.pix) < 1e-10);
    // a 1xN grid transforms exactly like the corresponding 1D signal
    if (ny == 1) {
      CHECK(max_abs_diff(g.coef, dct1_forward(img.pix)) < 1e-12);
    }
  }
}

TEST_CASE("transforms stay exact on larger power-of-two sizes") {
  Rng rng(107);
  const Signal1D x = random_vector(rng, 1024);
  CHECK(rel_err(dct1_inverse(dct1_forward(x)), x) < 1e-10);
  const Signal1D y = random_vector(rng, 512);
  CHECK(max_abs_diff(dct1_forward(y), oracle_dct1_forward(y)) < 1e-11);
}
