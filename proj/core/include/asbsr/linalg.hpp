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

#ifndef ASBSR_LINALG_HPP_
#define ASBSR_LINALG_HPP_

#include <vector>

namespace asbsr {

/// Dense LU factorization with partial pivoting for the small square systems
/// of the direct reconstruction path.
class LuSolver {
 public:
  /// Factors the n x n row-major matrix in place. Throws SingularSystemError
  /// on an exactly zero pivot.
  LuSolver(std::vector<double> a, int n);

  /// Solves A x = b.
  std::vector<double> solve(const std::vector<double>& b) const;

  /// Solves A^T x = b using the same factorization.
  std::vector<double> solve_transposed(const std::vector<double>& b) const;

  /// 1-norm condition number estimate: ||A||_1 times a Hager-style estimate
  /// of ||A^{-1}||_1 obtained from a handful of solves. Deterministic.
  double condition_estimate() const;

  int size() const { return n_; }

 private:
  int n_ = 0;
  double norm1_a_ = 0.0;
  std::vector<double> lu_;
  std::vector<int> piv_;
};

}  // namespace asbsr

#endif  // ASBSR_LINALG_HPP_
