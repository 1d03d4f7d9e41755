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

#include "asbsr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>

#include "asbsr/errors.hpp"
#include "asbsr/types.hpp"

namespace asbsr {

LuSolver::LuSolver(std::vector<double> a, int n) : n_(n), lu_(std::move(a)) {
  detail::require(n >= 1, "LuSolver requires n >= 1");
  detail::require(lu_.size() == static_cast<std::size_t>(n) * n,
                  "LuSolver matrix size mismatch");

  // Column 1-norms of A, taken before the factorization overwrites it.
  for (int c = 0; c < n_; ++c) {
    double s = 0.0;
    for (int r = 0; r < n_; ++r) s += std::fabs(lu_[static_cast<std::size_t>(r) * n_ + c]);
    norm1_a_ = std::max(norm1_a_, s);
  }

  piv_.resize(n_);
  for (int i = 0; i < n_; ++i) piv_[i] = i;

  double* m = lu_.data();
  for (int k = 0; k < n_; ++k) {
    int p = k;
    double best = std::fabs(m[static_cast<std::size_t>(k) * n_ + k]);
    for (int r = k + 1; r < n_; ++r) {
      double v = std::fabs(m[static_cast<std::size_t>(r) * n_ + k]);
      if (v > best) {
        best = v;
        p = r;
      }
    }
    if (best == 0.0 || !std::isfinite(best)) {
      throw SingularSystemError("sub-transform matrix is singular (zero pivot at step " +
                                std::to_string(k) + ")");
    }
    if (p != k) {
      for (int c = 0; c < n_; ++c) {
        std::swap(m[static_cast<std::size_t>(k) * n_ + c],
                  m[static_cast<std::size_t>(p) * n_ + c]);
      }
      std::swap(piv_[k], piv_[p]);
    }
    const double pivot = m[static_cast<std::size_t>(k) * n_ + k];
    for (int r = k + 1; r < n_; ++r) {
      double f = m[static_cast<std::size_t>(r) * n_ + k] / pivot;
      m[static_cast<std::size_t>(r) * n_ + k] = f;
      if (f != 0.0) {
        const double* rowk = m + static_cast<std::size_t>(k) * n_;
        double* rowr = m + static_cast<std::size_t>(r) * n_;
        for (int c = k + 1; c < n_; ++c) rowr[c] -= f * rowk[c];
      }
    }
  }
}

std::vector<double> LuSolver::solve(const std::vector<double>& b) const {
  detail::require(b.size() == static_cast<std::size_t>(n_), "right-hand side size mismatch");
  std::vector<double> x(n_);
  for (int i = 0; i < n_; ++i) x[i] = b[piv_[i]];
  const double* m = lu_.data();
  // Ly = Pb (unit lower triangular).
  for (int r = 1; r < n_; ++r) {
    double s = x[r];
    const double* row = m + static_cast<std::size_t>(r) * n_;
    for (int c = 0; c < r; ++c) s -= row[c] * x[c];
    x[r] = s;
  }
  // Ux = y.
  for (int r = n_ - 1; r >= 0; --r) {
    double s = x[r];
    const double* row = m + static_cast<std::size_t>(r) * n_;
    for (int c = r + 1; c < n_; ++c) s -= row[c] * x[c];
    x[r] = s / row[r];
  }
  return x;
}

std::vector<double> LuSolver::solve_transposed(const std::vector<double>& b) const {
  detail::require(b.size() == static_cast<std::size_t>(n_), "right-hand side size mismatch");
  // A^T = (P^T L U)^T = U^T L^T P, so solve U^T y = b, L^T z = y, x = P^T z.
  std::vector<double> y = b;
  const double* m = lu_.data();
  for (int r = 0; r < n_; ++r) {
    double s = y[r];
    for (int c = 0; c < r; ++c) s -= m[static_cast<std::size_t>(c) * n_ + r] * y[c];
    y[r] = s / m[static_cast<std::size_t>(r) * n_ + r];
  }
  for (int r = n_ - 1; r >= 0; --r) {
    double s = y[r];
    for (int c = r + 1; c < n_; ++c) s -= m[static_cast<std::size_t>(c) * n_ + r] * y[c];
    y[r] = s;
  }
  std::vector<double> x(n_);
  for (int i = 0; i < n_; ++i) x[piv_[i]] = y[i];
  return x;
}

double LuSolver::condition_estimate() const {
  if (n_ == 1) {
    double d = std::fabs(lu_[0]);
    return d == 0.0 ? std::numeric_limits<double>::infinity() : norm1_a_ / d;
  }

  // Hager's power method on ||A^{-1}||_1 driven by LU solves.
  std::vector<double> x(n_, 1.0 / n_);
  double est = 0.0;
  int last_j = -1;
  for (int iter = 0; iter < 5; ++iter) {
    std::vector<double> y = solve(x);
    double norm_y = 0.0;
    for (double v : y) norm_y += std::fabs(v);
    est = std::max(est, norm_y);
    if (!std::isfinite(norm_y)) return std::numeric_limits<double>::infinity();

    std::vector<double> xi(n_);
    for (int i = 0; i < n_; ++i) xi[i] = (y[i] >= 0.0) ? 1.0 : -1.0;
    std::vector<double> z = solve_transposed(xi);

    int j = 0;
    double zmax = std::fabs(z[0]);
    for (int i = 1; i < n_; ++i) {
      if (std::fabs(z[i]) > zmax) {
        zmax = std::fabs(z[i]);
        j = i;
      }
    }
    double zx = 0.0;
    for (int i = 0; i < n_; ++i) zx += z[i] * x[i];
    if (zmax <= zx || j == last_j) break;
    std::fill(x.begin(), x.end(), 0.0);
    x[j] = 1.0;
    last_j = j;
  }
  return norm1_a_ * est;
}

}  // namespace asbsr
