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

#ifndef QGT_SUPPORT_ENUMERATION_HPP
#define QGT_SUPPORT_ENUMERATION_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qgt/detail/linear_solve.hpp"
#include "qgt/error.hpp"
#include "qgt/game.hpp"

namespace qgt {

inline constexpr std::size_t kMaxSupportEnumerationSize = 4;
inline constexpr double kMixedNashEpsilon = 1e-9;

struct MixedEquilibrium {
  MixedStrategy row;
  MixedStrategy col;
  PayoffPair value;
};

/// Largest gain either player gets from a pure deviation against (x, y).
inline double max_pure_deviation_gain(const Game& g, const std::vector<double>& x,
                                      const std::vector<double>& y) {
  double v1 = 0.0, v2 = 0.0;
  std::vector<double> row_values(g.rows(), 0.0), col_values(g.cols(), 0.0);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      row_values[i] += y[j] * g.at(i, j).first;
      col_values[j] += x[i] * g.at(i, j).second;
      v1 += x[i] * y[j] * g.at(i, j).first;
      v2 += x[i] * y[j] * g.at(i, j).second;
    }
  }
  const double best1 = *std::max_element(row_values.begin(), row_values.end());
  const double best2 = *std::max_element(col_values.begin(), col_values.end());
  return std::max(best1 - v1, best2 - v2);
}

namespace detail {

// Weights on `support` (bitmask over the opponent's strategies) making the
// player whose payoffs are `value(own, opp)` indifferent across `own_support`.
template <typename PayoffFn>
std::optional<std::vector<double>> indifference_weights(std::uint32_t own_support,
                                                        std::uint32_t opp_support,
                                                        std::size_t opp_count, PayoffFn value) {
  std::vector<std::size_t> own, opp;
  for (std::size_t i = 0; i < 32; ++i) {
    if (own_support >> i & 1u) own.push_back(i);
    if (opp_support >> i & 1u) opp.push_back(i);
  }
  const std::size_t k = opp.size();
  const std::size_t n = k + 1;
  std::vector<double> a(n * n, 0.0), b(n, 0.0);
  for (std::size_t r = 0; r < own.size(); ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r * n + c] = value(own[r], opp[c]);
    a[r * n + k] = -1.0;
  }
  for (std::size_t c = 0; c < k; ++c) a[k * n + c] = 1.0;
  b[k] = 1.0;
  auto sol = solve_square(std::move(a), std::move(b));
  if (!sol) return std::nullopt;
  std::vector<double> w(opp_count, 0.0);
  double total = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    double v = (*sol)[c];
    if (v < -kWeightTolerance) return std::nullopt;
    v = std::max(v, 0.0);
    w[opp[c]] = v;
    total += v;
  }
  if (total <= 0.0) return std::nullopt;
  for (double& v : w) v /= total;
  return w;
}

inline MixedStrategy to_mixed(const LabelList& labels, const std::vector<double>& w) {
  MixedStrategy m;
  for (std::size_t i = 0; i < labels.size(); ++i) m.weights[labels[i]] = w[i];
  return m;
}

}  // namespace detail

/// Support enumeration over equal-size support pairs for games with at most
/// four strategies per player. Each candidate is re-verified as a 1e-9 Nash
/// equilibrium against all pure deviations; candidates inducing the same
/// joint distribution (total variation < 1e-9) are reported once.
inline std::vector<MixedEquilibrium> mixed_nash_small(const Game& g) {
  if (g.rows() > kMaxSupportEnumerationSize || g.cols() > kMaxSupportEnumerationSize) {
    throw SizeLimitError("support enumeration is limited to 4x4 games");
  }
  const std::uint32_t row_masks = 1u << g.rows();
  const std::uint32_t col_masks = 1u << g.cols();
  std::vector<MixedEquilibrium> out;
  std::vector<JointDistribution> seen;
  const std::size_t max_k = std::min(g.rows(), g.cols());
  for (std::size_t k = 1; k <= max_k; ++k) {
    for (std::uint32_t rs = 1; rs < row_masks; ++rs) {
      if (static_cast<std::size_t>(std::popcount(rs)) != k) continue;
      for (std::uint32_t cs = 1; cs < col_masks; ++cs) {
        if (static_cast<std::size_t>(std::popcount(cs)) != k) continue;
        // Player 2's mixture equalizes Player 1 over the row support, and vice versa.
        auto y = detail::indifference_weights(rs, cs, g.cols(), [&](std::size_t i, std::size_t j) {
          return g.at(i, j).first;
        });
        if (!y) continue;
        auto x = detail::indifference_weights(cs, rs, g.rows(), [&](std::size_t j, std::size_t i) {
          return g.at(i, j).second;
        });
        if (!x) continue;
        if (max_pure_deviation_gain(g, *x, *y) > kMixedNashEpsilon) continue;
        MixedEquilibrium eq{detail::to_mixed(g.strategies1(), *x),
                            detail::to_mixed(g.strategies2(), *y), {}};
        auto joint = product_distribution(g, eq.row, eq.col);
        const bool duplicate = std::any_of(seen.begin(), seen.end(), [&](const auto& other) {
          return total_variation(joint, other) < 1e-9;
        });
        if (duplicate) continue;
        eq.value = expected_payoff(g, joint);
        seen.push_back(std::move(joint));
        out.push_back(std::move(eq));
      }
    }
  }
  return out;
}

}  // namespace qgt

#endif  // QGT_SUPPORT_ENUMERATION_HPP
