// Copyright 2026 The qgt Authors
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

#ifndef QGT_DETAIL_LINEAR_SOLVE_HPP
#define QGT_DETAIL_LINEAR_SOLVE_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qgt::detail {

/// Solves the square system A x = b (A row-major, n x n) by Gaussian
/// elimination with partial pivoting. Rank-deficient systems get a basic
/// solution with free variables at zero; inconsistent ones yield nullopt.
inline std::optional<std::vector<double>> solve_square(std::vector<double> a, std::vector<double> b,
                                                       double pivot_tol = 1e-12,
                                                       double residual_tol = 1e-9) {
  const std::size_t n = b.size();
  const auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < n; ++r) {
      if (std::abs(at(r, col)) > std::abs(at(best, col))) best = r;
    }
    if (std::abs(at(best, col)) <= pivot_tol) continue;
    if (best != row) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(row, c), at(best, c));
      std::swap(b[row], b[best]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row) continue;
      const double f = at(r, col) / at(row, col);
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) at(r, c) -= f * at(row, c);
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r) {
    if (std::abs(b[r]) > residual_tol) return std::nullopt;
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r] / at(r, pivot_col[r]);
  return x;
}

}  // namespace qgt::detail

#endif  // QGT_DETAIL_LINEAR_SOLVE_HPP
