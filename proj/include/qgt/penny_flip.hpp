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

#ifndef QGT_PENNY_FLIP_HPP
#define QGT_PENNY_FLIP_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "qgt/environment.hpp"
#include "qgt/error.hpp"
#include "qgt/game.hpp"
#include "qgt/quantum_state.hpp"

namespace qgt {

/// Flip: ((0, 1), (-i, 0)).
inline UnitaryOp penny_flip() { return UnitaryOp(2, {0.0, 1.0, Complex(0.0, -1.0), 0.0}); }

/// Leave the penny alone.
inline UnitaryOp penny_no_flip() { return UnitaryOp::identity(2); }

/// Meyer's cheat: (1/2) ((1 + i, sqrt 2), (-sqrt 2, 1 - i)).
inline UnitaryOp meyer_u() {
  const double r = std::numbers::sqrt2 / 2.0;
  return UnitaryOp(2, {Complex(0.5, 0.5), r, -r, Complex(0.5, -0.5)});
}

/// NN, NF, FN, FF against N, F: Player 1 wins on an even number of flips.
inline Game penny_game() {
  return Game("penny", {"NN", "NF", "FN", "FF"}, {"N", "F"},
              {{1, 0}, {0, 1}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {1, 0}, {0, 1}});
}

enum class ProtocolKind { Simple, Sequential };

struct Move {
  Player player;
  UnitaryOp op;
};

/// Sequential scripts run P1, P2, P1 on one penny. Simple scripts give P1
/// two pennies (two 2x2 moves, or one 4x4 move on both) and P2 one penny.
struct ProtocolScript {
  ProtocolKind kind;
  std::vector<Move> moves;

  void validate() const {
    if (kind == ProtocolKind::Sequential) {
      static constexpr std::array kOrder{Player::One, Player::Two, Player::One};
      if (moves.size() != 3) throw ValidationError("sequential protocol takes exactly three moves");
      for (std::size_t k = 0; k < 3; ++k) {
        if (moves[k].player != kOrder[k]) throw ValidationError("sequential protocol turn order is P1, P2, P1");
        if (moves[k].op.dim() != 2) throw ValidationError("penny moves are 2x2 unitaries");
      }
      return;
    }
    std::size_t dims1 = 0, count2 = 0;
    for (const auto& m : moves) {
      if (m.player == Player::One) {
        dims1 += m.op.dim() == 4 ? 2 : 1;
        if (m.op.dim() != 2 && m.op.dim() != 4) throw ValidationError("Player 1 moves are 2x2 or 4x4");
      } else {
        ++count2;
        if (m.op.dim() != 2) throw ValidationError("Player 2 moves a single penny");
      }
    }
    if (dims1 != 2 || count2 != 1) throw ValidationError("simple protocol: two pennies for P1, one for P2");
  }
};

struct SequentialOutcome {
  std::array<Complex, 2> final_state;
  double prob_heads;
  double prob_tails;
  /// Expected payoffs under the (1, 0) on H / (0, 1) on T rule.
  PayoffPair payoffs;
};

/// Applies op1, op2, op3 in turn to a penny starting at H.
inline SequentialOutcome run_sequential(const std::array<UnitaryOp, 3>& ops) {
  ProtocolScript{ProtocolKind::Sequential,
                 {{Player::One, ops[0]}, {Player::Two, ops[1]}, {Player::One, ops[2]}}}
      .validate();
  std::array<Complex, 2> psi{1.0, 0.0};
  for (const auto& op : ops) {
    psi = {op(0, 0) * psi[0] + op(0, 1) * psi[1], op(1, 0) * psi[0] + op(1, 1) * psi[1]};
  }
  const double total = std::norm(psi[0]) + std::norm(psi[1]);
  const double h = std::norm(psi[0]) / total;
  const double t = std::norm(psi[1]) / total;
  return {psi, h, t, {h, t}};
}

/// Draws the referee's H/T observation; demo use only. Returns true for H.
inline bool sample_heads(const SequentialOutcome& outcome, std::mt19937_64& rng) {
  return std::bernoulli_distribution(outcome.prob_heads)(rng);
}

namespace detail {

inline double flip_probability(const UnitaryOp& op) { return std::norm(op(1, 0)); }

}  // namespace detail

/// Independent pennies: each starts at H, is moved by its owner and
/// measured; H reads as N and T as F.
inline JointDistribution run_simple(const std::pair<UnitaryOp, UnitaryOp>& p1, const UnitaryOp& p2) {
  ProtocolScript{ProtocolKind::Simple, {{Player::One, p1.first}, {Player::One, p1.second}, {Player::Two, p2}}}
      .validate();
  const std::array<double, 2> a{1.0 - detail::flip_probability(p1.first), detail::flip_probability(p1.first)};
  const std::array<double, 2> b{1.0 - detail::flip_probability(p1.second), detail::flip_probability(p1.second)};
  const std::array<double, 2> c{1.0 - detail::flip_probability(p2), detail::flip_probability(p2)};
  static constexpr std::array kBit{"N", "F"};
  JointDistribution out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        out[{std::string(kBit[i]) + kBit[j], kBit[k]}] = a[i] * b[j] * c[k];
      }
    }
  }
  return out;
}

/// Player 1 moves both pennies at once with a 4x4 unitary on H (x) H.
inline JointDistribution run_simple(const UnitaryOp& p1_joint, const UnitaryOp& p2) {
  ProtocolScript{ProtocolKind::Simple, {{Player::One, p1_joint}, {Player::Two, p2}}}.validate();
  const auto d = measure_joint(apply_local(StateVector::basis(4, 2, 0, 0), p1_joint, p2));
  static constexpr std::array kRow{"NN", "NF", "FN", "FF"};
  static constexpr std::array kCol{"N", "F"};
  JointDistribution out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out[{kRow[i], kCol[j]}] = d(i, j);
  }
  return out;
}

struct MeyerReport {
  double unitarity_residual;
  double offdiag_flip;
  double offdiag_no_flip;
  double win_vs_flip;
  double win_vs_no_flip;
  /// (probability that Player 2 flips, Player 1's win probability).
  std::vector<std::pair<double, double>> mixtures;
  double max_residual;
  bool passed;
};

/// Checks that U on the first turn and U^-1 on the last wins for Player 1
/// whatever Player 2 does, classical mixtures included.
inline MeyerReport meyer_cheat_check() {
  const UnitaryOp u = meyer_u();
  const UnitaryOp u_inv = u.adjoint();
  const UnitaryOp conj_flip = u_inv * penny_flip() * u;
  const UnitaryOp conj_no_flip = u_inv * penny_no_flip() * u;
  const auto offdiag = [](const UnitaryOp& m) { return std::max(std::abs(m(0, 1)), std::abs(m(1, 0))); };
  MeyerReport r{};
  r.unitarity_residual = u.unitarity_residual();
  r.offdiag_flip = offdiag(conj_flip);
  r.offdiag_no_flip = offdiag(conj_no_flip);
  r.win_vs_flip = run_sequential({u, penny_flip(), u_inv}).prob_heads;
  r.win_vs_no_flip = run_sequential({u, penny_no_flip(), u_inv}).prob_heads;
  r.max_residual = std::max({r.unitarity_residual, r.offdiag_flip, r.offdiag_no_flip,
                             std::abs(1.0 - r.win_vs_flip), std::abs(1.0 - r.win_vs_no_flip)});
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0;
    const double win = p * r.win_vs_flip + (1.0 - p) * r.win_vs_no_flip;
    r.mixtures.emplace_back(p, win);
    r.max_residual = std::max(r.max_residual, std::abs(1.0 - win));
  }
  r.passed = r.max_residual <= 1e-12;
  return r;
}

}  // namespace qgt

#endif  // QGT_PENNY_FLIP_HPP
