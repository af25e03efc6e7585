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

#ifndef QGT_CIRCLE_SEARCH_HPP
#define QGT_CIRCLE_SEARCH_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace qgt {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr std::size_t kCircleGrid = 4096;
inline constexpr double kGoldenWidth = 1e-10;

/// Reduces an angle to [0, 2pi); values within 1e-9 below 2pi map to 0.
inline double canonical_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (kTwoPi - r < 1e-9) r = 0.0;
  return r;
}

struct CircleMax {
  double angle;
  double value;
};

/// Golden-section search for a maximum of `f` on [lo, hi].
template <typename F>
CircleMax golden_section_max(F&& f, double lo, double hi, double width = kGoldenWidth) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > width) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? CircleMax{c, fc} : CircleMax{d, fd};
}

/// Maximizes a 2pi-periodic function: a uniform grid locates the local
/// maxima, golden-section search refines each one, and ties within
/// `tie_tol` go to the smallest angle in [0, 2pi).
template <typename F>
CircleMax maximize_on_circle(F&& f, std::size_t grid = kCircleGrid, double width = kGoldenWidth,
                             double tie_tol = 1e-12) {
  const double h = kTwoPi / static_cast<double>(grid);
  std::vector<double> v(grid);
  for (std::size_t k = 0; k < grid; ++k) v[k] = f(h * static_cast<double>(k));
  const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  if (*hi_it - *lo_it <= tie_tol) return {0.0, v[0]};

  std::vector<CircleMax> candidates;
  for (std::size_t k = 0; k < grid; ++k) {
    const double prev = v[(k + grid - 1) % grid], next = v[(k + 1) % grid];
    if (v[k] < prev || v[k] < next) continue;
    const double center = h * static_cast<double>(k);
    CircleMax refined = golden_section_max(f, center - h, center + h, width);
    // Grid points are kept unless refinement strictly improves on them.
    if (refined.value > v[k]) {
      candidates.push_back({canonical_angle(refined.angle), refined.value});
    } else {
      candidates.push_back({center, v[k]});
    }
  }
  double best = candidates.front().value;
  for (const auto& c : candidates) best = std::max(best, c.value);
  CircleMax out{kTwoPi, best};
  for (const auto& c : candidates) {
    if (c.value >= best - tie_tol && c.angle < out.angle) out = c;
  }
  return out;
}

}  // namespace qgt

#endif  // QGT_CIRCLE_SEARCH_HPP
