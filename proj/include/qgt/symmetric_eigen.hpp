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

#ifndef QGT_SYMMETRIC_EIGEN_HPP
#define QGT_SYMMETRIC_EIGEN_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace qgt {

template <std::size_t N>
struct SymmetricEigen {
  std::array<double, N> values;
  /// vectors[k] is the unit eigenvector for values[k].
  std::array<std::array<double, N>, N> vectors;

  std::size_t argmax() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < N; ++k) {
      if (values[k] > values[best]) best = k;
    }
    return best;
  }
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below `tol`. The input must be symmetric.
template <std::size_t N>
SymmetricEigen<N> jacobi_eigen(std::array<std::array<double, N>, N> a, double tol = 1e-12,
                               int max_sweeps = 100) {
  std::array<std::array<double, N>, N> v{};
  for (std::size_t i = 0; i < N; ++i) v[i][i] = 1.0;
  const auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = 0; q < N; ++q) {
        if (p != q) s += a[p][q] * a[p][q];
      }
    }
    return std::sqrt(s);
  };
  for (int sweep = 0; sweep < max_sweeps && off_norm() >= tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  SymmetricEigen<N> out{};
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a[k][k];
    for (std::size_t i = 0; i < N; ++i) out.vectors[k][i] = v[i][k];
  }
  return out;
}

}  // namespace qgt

#endif  // QGT_SYMMETRIC_EIGEN_HPP
