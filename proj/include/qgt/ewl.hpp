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

#ifndef QGT_EWL_HPP
#define QGT_EWL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qgt/error.hpp"
#include "qgt/game.hpp"
#include "qgt/penny_flip.hpp"
#include "qgt/quantum_state.hpp"
#include "qgt/quaternion.hpp"
#include "qgt/support_enumeration.hpp"
#include "qgt/symmetric_eigen.hpp"

namespace qgt {

inline constexpr double kUnitQuaternionTolerance = 1e-12;
inline constexpr std::size_t kMaxQuatSupport = 8;

/// An outcome cell of a 2x2 game; index 0 is C, 1 is D.
struct Cell {
  std::size_t row;
  std::size_t col;
  auto operator<=>(const Cell&) const = default;
  std::size_t index() const { return row * 2 + col; }
  std::string name() const { return std::string(row ? "D" : "C") + (col ? "D" : "C"); }
};

/// Which outcome cell each squared component of the strategy product pays.
/// The real component always pays (C, C).
class OutcomeAssignment {
 public:
  explicit OutcomeAssignment(std::array<Cell, 4> slots) : slots_(slots) {
    if (slots_[0] != Cell{0, 0}) throw ValidationError("the real component must pay (C,C)");
    std::array<bool, 4> seen{};
    for (const auto& c : slots_) {
      if (c.row > 1 || c.col > 1 || seen[c.index()]) throw ValidationError("outcome assignment is not a bijection");
      seen[c.index()] = true;
    }
  }

  /// B^2 -> (D,D), C^2 -> (C,D), D^2 -> (D,C).
  static OutcomeAssignment default_assignment() { return OutcomeAssignment({{{0, 0}, {1, 1}, {0, 1}, {1, 0}}}); }

  /// B^2 -> (C,D), C^2 -> (D,C), D^2 -> (D,D), as the formula is printed.
  static OutcomeAssignment paper_assignment() { return OutcomeAssignment({{{0, 0}, {0, 1}, {1, 0}, {1, 1}}}); }

  const Cell& slot(std::size_t k) const { return slots_[k]; }

  std::string describe() const {
    static constexpr std::array kSlot{"A2", "B2", "C2", "D2"};
    std::string s;
    for (std::size_t k = 0; k < 4; ++k) s += std::string(k ? "," : "") + kSlot[k] + "->" + slots_[k].name();
    return s;
  }

 private:
  std::array<Cell, 4> slots_;
};

/// Outcome probabilities indexed by Cell::index() (CC, CD, DC, DD).
using CellDistribution = std::array<double, 4>;

inline CellDistribution slot_distribution(const Quaternion& r, const OutcomeAssignment& asg) {
  CellDistribution out{};
  const auto comps = r.components();
  for (std::size_t k = 0; k < 4; ++k) out[asg.slot(k).index()] += comps[k] * comps[k];
  return out;
}

inline void check_unit(const Quaternion& q) {
  if (std::abs(q.norm2() - 1.0) > kUnitQuaternionTolerance) {
    throw ValidationError("strategy quaternion " + q.to_string() + " is not a unit quaternion");
  }
}

namespace detail {

inline void check_two_by_two(const Game& g) {
  if (g.rows() != 2 || g.cols() != 2) throw ValidationError("the quaternion game needs a 2x2 base game");
}

inline double cell_payoff(const Game& g, const Cell& c, int who) {
  const auto& p = g.at(c.row, c.col);
  return who == 1 ? p.first : p.second;
}

}  // namespace detail

inline PayoffPair quat_payoff(const Game& g, const Quaternion& p, const Quaternion& q, const OutcomeAssignment& asg) {
  detail::check_two_by_two(g);
  check_unit(p);
  check_unit(q);
  const auto dist = slot_distribution(p * q, asg);
  PayoffPair out{0.0, 0.0};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      out.first += dist[r * 2 + c] * g.at(r, c).first;
      out.second += dist[r * 2 + c] * g.at(r, c).second;
    }
  }
  return out;
}

/// A finitely supported probability measure on the unit quaternions.
class MixedQuatStrategy {
 public:
  explicit MixedQuatStrategy(std::vector<std::pair<Quaternion, double>> support) : support_(std::move(support)) {
    if (support_.empty() || support_.size() > kMaxQuatSupport) {
      throw ValidationError("quaternion mixtures need between 1 and 8 support points");
    }
    double total = 0.0;
    for (const auto& [q, w] : support_) {
      check_unit(q);
      if (!std::isfinite(w) || w < 0.0) throw ValidationError("mixture weights must be nonnegative");
      total += w;
    }
    if (std::abs(total - 1.0) > kWeightTolerance) throw ValidationError("mixture weights must sum to 1");
  }

  static MixedQuatStrategy point(const Quaternion& q) { return MixedQuatStrategy({{q, 1.0}}); }

  static MixedQuatStrategy uniform(const std::vector<Quaternion>& qs) {
    std::vector<std::pair<Quaternion, double>> s;
    for (const auto& q : qs) s.emplace_back(q, 1.0 / static_cast<double>(qs.size()));
    return MixedQuatStrategy(std::move(s));
  }

  const std::vector<std::pair<Quaternion, double>>& support() const { return support_; }

 private:
  std::vector<std::pair<Quaternion, double>> support_;
};

inline CellDistribution outcome_distribution(const MixedQuatStrategy& s1, const MixedQuatStrategy& s2,
                                             const OutcomeAssignment& asg) {
  CellDistribution out{};
  for (const auto& [p, wp] : s1.support()) {
    for (const auto& [q, wq] : s2.support()) {
      const auto d = slot_distribution(p * q, asg);
      for (std::size_t k = 0; k < 4; ++k) out[k] += wp * wq * d[k];
    }
  }
  return out;
}

inline PayoffPair mixed_quat_payoff(const Game& g, const MixedQuatStrategy& s1, const MixedQuatStrategy& s2,
                                    const OutcomeAssignment& asg) {
  PayoffPair out{0.0, 0.0};
  for (const auto& [p, wp] : s1.support()) {
    for (const auto& [q, wq] : s2.support()) {
      const auto u = quat_payoff(g, p, q, asg);
      out.first += wp * wq * u.first;
      out.second += wp * wq * u.second;
    }
  }
  return out;
}

/// M with r^T M r equal to the responder's expected payoff from pure unit
/// quaternion r against `opponent`. Since p q is linear in each factor,
/// M = sum_k w_k X_k^T D X_k, where X_k multiplies by the k-th support point
/// (on the right for Player 1, on the left for Player 2) and D holds the
/// responder's payoffs per component slot.
inline Mat4 best_response_matrix(const Game& g, const MixedQuatStrategy& opponent, Player who,
                                 const OutcomeAssignment& asg) {
  detail::check_two_by_two(g);
  const int w = who == Player::One ? 1 : 2;
  Vec4 diag{};
  for (std::size_t k = 0; k < 4; ++k) diag[k] = detail::cell_payoff(g, asg.slot(k), w);
  Mat4 m{};
  for (const auto& [q, weight] : opponent.support()) {
    const Mat4 x = who == Player::One ? right_matrix(q) : left_matrix(q);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        double s = 0.0;
        for (std::size_t k = 0; k < 4; ++k) s += x[k][r] * diag[k] * x[k][c];
        m[r][c] += weight * s;
      }
    }
  }
  return m;
}

struct QuatDeviation {
  Player player;
  Quaternion deviation;
  double payoff;
  double gain;
};

struct QuatVerdict {
  bool equilibrium = false;
  PayoffPair payoffs{};
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double gain1 = 0.0;
  double gain2 = 0.0;
  std::optional<QuatDeviation> witness;
};

/// The best pure reply is the top eigenvector of the best-response matrix,
/// so a profile is an equilibrium iff each player's largest eigenvalue is
/// at most its current payoff plus `eps`.
inline QuatVerdict is_quat_equilibrium(const Game& g, const MixedQuatStrategy& s1, const MixedQuatStrategy& s2,
                                       const OutcomeAssignment& asg, double eps = kDefaultEquilibriumEpsilon) {
  QuatVerdict v;
  v.payoffs = mixed_quat_payoff(g, s1, s2, asg);
  const auto e1 = jacobi_eigen(best_response_matrix(g, s2, Player::One, asg));
  const auto e2 = jacobi_eigen(best_response_matrix(g, s1, Player::Two, asg));
  const std::size_t k1 = e1.argmax(), k2 = e2.argmax();
  v.lambda1 = e1.values[k1];
  v.lambda2 = e2.values[k2];
  v.gain1 = std::max(0.0, v.lambda1 - v.payoffs.first);
  v.gain2 = std::max(0.0, v.lambda2 - v.payoffs.second);
  v.equilibrium = v.gain1 <= eps && v.gain2 <= eps;
  if (!v.equilibrium) {
    if (v.gain1 >= v.gain2) {
      v.witness = QuatDeviation{Player::One, Quaternion::from(e1.vectors[k1]).normalized(), v.lambda1, v.gain1};
    } else {
      v.witness = QuatDeviation{Player::Two, Quaternion::from(e2.vectors[k2]).normalized(), v.lambda2, v.gain2};
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Direct two-qubit simulation and its identification with the quaternion form.

/// Quaternion of u / sqrt(det u), where the root with nonnegative real part
/// (then nonnegative imaginary part) is used. a + bi + cj + dk corresponds
/// to ((a + bi, c + di), (-c + di, a - bi)).
inline Quaternion su2_quaternion(const UnitaryOp& u) {
  if (u.dim() != 2) throw ValidationError("quaternion identification needs a 2x2 unitary");
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  Complex root = std::sqrt(det);
  if (root.real() < 0.0 || (root.real() == 0.0 && root.imag() < 0.0)) root = -root;
  const Complex top_left = u(0, 0) / root, top_right = u(0, 1) / root;
  return Quaternion{top_left.real(), top_left.imag(), top_right.real(), top_right.imag()};
}

inline UnitaryOp quaternion_unitary(const Quaternion& q) {
  return UnitaryOp(2, {Complex(q.a, q.b), Complex(q.c, q.d), Complex(-q.c, q.d), Complex(q.a, -q.b)});
}

namespace detail {

// (s1 (x) s2) xi for classical moves, indexed by Cell::index().
inline std::array<StateVector, 4> ewl_measurement_basis() {
  const std::array<UnitaryOp, 2> moves{penny_no_flip(), penny_flip()};
  const StateVector xi = entangled_pair();
  std::array<StateVector, 4> basis{xi, xi, xi, xi};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) basis[r * 2 + c] = apply_local(xi, moves[r], moves[c]).normalized();
  }
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      if (std::abs(basis[x].inner(basis[y]) - (x == y ? 1.0 : 0.0)) > 1e-12) {
        throw InternalError("EWL measurement basis is not orthonormal");
      }
    }
  }
  return basis;
}

}  // namespace detail

/// Referee's outcome law when the players apply u1 and u2 to the halves of
/// the entangled pair, measured in the basis the classical moves generate.
inline CellDistribution ewl_direct(const UnitaryOp& u1, const UnitaryOp& u2) {
  if (u1.dim() != 2 || u2.dim() != 2) throw ValidationError("EWL moves are 2x2 unitaries");
  static const auto basis = detail::ewl_measurement_basis();
  const StateVector out = apply_local(entangled_pair(), u1, u2);
  CellDistribution d{};
  for (std::size_t k = 0; k < 4; ++k) d[k] = std::norm(basis[k].inner(out));
  return d;
}

inline double total_variation(const CellDistribution& a, const CellDistribution& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < 4; ++k) s += std::abs(a[k] - b[k]);
  return 0.5 * s;
}

/// A unitary drawn from the Haar measure on U(2).
inline UnitaryOp random_unitary2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const Quaternion q = Quaternion{gauss(rng), gauss(rng), gauss(rng), gauss(rng)}.normalized();
  const UnitaryOp base = quaternion_unitary(q);
  const Complex z = std::polar(1.0, phase(rng));
  std::vector<Complex> e(base.entries());
  for (auto& x : e) x *= z;
  return UnitaryOp(2, std::move(e));
}

/// An identification of the direct simulation with the quaternion form:
/// ewl_direct(u1, u2) equals the slot distribution of
/// (conj(a) p a)(conj(a) tau(q) a), with p, q the quaternions of u1, u2.
struct Calibration {
  bool feasible = false;
  Quaternion frame;
  /// Signs applied to the measurement-basis directions paired with the
  /// i, j, k slots.
  std::array<int, 3> signs{1, 1, 1};
  double frame_det = 0.0;
  double max_tv_error = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

inline CellDistribution calibrated_distribution(const Calibration& cal, const OutcomeAssignment& asg,
                                                const UnitaryOp& u1, const UnitaryOp& u2) {
  const Quaternion a = cal.frame, abar = cal.frame.conj();
  const Quaternion p = abar * su2_quaternion(u1) * a;
  const Quaternion q = abar * transpose_twist(su2_quaternion(u2)) * a;
  return slot_distribution(p * q, asg);
}

inline constexpr std::uint64_t kDefaultCalibrationSeed = 20111201;

/// Finds a frame quaternion identifying the direct simulation with the
/// quaternion form under `asg`, then validates it on `trials` random pairs.
/// Throws InternalError if an algebraically valid frame fails the numeric
/// check.
inline Calibration calibrate(const OutcomeAssignment& asg, std::size_t trials = 1000,
                             std::uint64_t seed = kDefaultCalibrationSeed) {
  Calibration cal;
  cal.trials = trials;
  cal.seed = seed;
  // Measurement basis element (s1 (x) s2) xi has overlap with (u1 (x) u2) xi
  // given by the 4-dot product of s1 tau(s2) with u1 tau(u2).
  const std::array<Quaternion, 2> moves{su2_quaternion(penny_no_flip()), su2_quaternion(penny_flip())};
  std::array<Quaternion, 4> cells;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) cells[r * 2 + c] = moves[r] * transpose_twist(moves[c]);
  }
  if (std::abs(std::abs(cells[0].a) - 1.0) > 1e-12) return cal;
  Mat3 frame{};
  for (std::size_t s = 0; s < 3; ++s) {
    const Quaternion& e = cells[asg.slot(s + 1).index()];
    frame[s] = {e.b, e.c, e.d};
  }
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      double d = 0.0;
      for (std::size_t k = 0; k < 3; ++k) d += frame[x][k] * frame[y][k];
      if (std::abs(d - (x == y ? 1.0 : 0.0)) > 1e-12) return cal;
    }
  }
  const auto det3 = [](const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  // Squared components ignore signs, so pick the first sign pattern that
  // makes the frame a proper rotation.
  for (int pattern = 0; pattern < 8 && !cal.feasible; ++pattern) {
    Mat3 rot = frame;
    std::array<int, 3> signs{};
    for (std::size_t s = 0; s < 3; ++s) {
      signs[s] = (pattern >> (2 - s) & 1) ? -1 : 1;
      for (auto& x : rot[s]) x *= signs[s];
    }
    const double det = det3(rot);
    if (det > 0.0) {
      cal.feasible = true;
      cal.signs = signs;
      cal.frame_det = det;
      // The rows of `rot` map the paired basis directions onto i, j, k; the
      // map x -> conj(a) x a must realize it.
      cal.frame = quaternion_from_rotation(rot).conj();
    }
  }
  if (!cal.feasible) return cal;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const UnitaryOp u1 = random_unitary2(rng), u2 = random_unitary2(rng);
    cal.max_tv_error =
        std::max(cal.max_tv_error, total_variation(ewl_direct(u1, u2), calibrated_distribution(cal, asg, u1, u2)));
  }
  if (!(cal.max_tv_error <= 1e-9)) {
    throw InternalError("calibration frame found but validation error is " + std::to_string(cal.max_tv_error));
  }
  return cal;
}

// ---------------------------------------------------------------------------
// Equilibrium search (informational, not exhaustive).

struct QuatEquilibriumClass {
  MixedQuatStrategy s1;
  MixedQuatStrategy s2;
  CellDistribution outcome;
  PayoffPair payoffs;
  std::size_t hits;
};

struct QuatSearchReport {
  std::vector<QuatEquilibriumClass> classes;
  std::size_t starts;
  std::size_t unmatched;
  std::uint64_t seed;
};

namespace detail {

inline std::array<Quaternion, 4> random_frame(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::array<Quaternion, 4> f;
  for (std::size_t k = 0; k < 4; ++k) {
    Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    for (std::size_t m = 0; m < k; ++m) {
      const double d = dot(q, f[m]);
      q = {q.a - d * f[m].a, q.b - d * f[m].b, q.c - d * f[m].c, q.d - d * f[m].d};
    }
    f[k] = q.normalized();
  }
  return f;
}

inline std::array<Quaternion, 4> eigen_frame(const Mat4& m) {
  const auto e = jacobi_eigen(m);
  std::array<Quaternion, 4> f;
  for (std::size_t k = 0; k < 4; ++k) f[k] = Quaternion::from(e.vectors[k]).normalized();
  return f;
}

inline MixedQuatStrategy frame_mixture(const std::array<Quaternion, 4>& frame, const LabelList& labels,
                                       const MixedStrategy& m) {
  std::vector<std::pair<Quaternion, double>> support;
  double total = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const double w = m.weights.at(labels[k]);
    if (w > 1e-12) {
      support.emplace_back(frame[k], w);
      total += w;
    }
  }
  for (auto& [q, w] : support) w /= total;
  return MixedQuatStrategy(std::move(support));
}

}  // namespace detail

/// From each seeded start, restricts both players to a 4-point orthonormal
/// frame, solves the restricted 4x4 game by support enumeration, and keeps
/// restricted equilibria that survive the full eigenvalue check. If none
/// survive, both frames are replaced by eigenbases of the best-response
/// matrices and the round repeats. Results are grouped by outcome law.
inline QuatSearchReport search_quat_equilibria(const Game& g, const OutcomeAssignment& asg, std::size_t starts,
                                               std::uint64_t seed, std::size_t max_rounds = 8) {
  detail::check_two_by_two(g);
  std::mt19937_64 rng(seed);
  QuatSearchReport report{{}, starts, 0, seed};
  const LabelList rows{"p0", "p1", "p2", "p3"}, cols{"q0", "q1", "q2", "q3"};
  for (std::size_t s = 0; s < starts; ++s) {
    auto f1 = detail::random_frame(rng);
    auto f2 = detail::random_frame(rng);
    bool matched = false;
    for (std::size_t round = 0; round < max_rounds && !matched; ++round) {
      std::vector<PayoffPair> table;
      for (const auto& p : f1) {
        for (const auto& q : f2) table.push_back(quat_payoff(g, p, q, asg));
      }
      const Game restricted("restricted", rows, cols, std::move(table));
      const auto eqs = mixed_nash_small(restricted);
      for (const auto& eq : eqs) {
        auto m1 = detail::frame_mixture(f1, rows, eq.row);
        auto m2 = detail::frame_mixture(f2, cols, eq.col);
        const auto verdict = is_quat_equilibrium(g, m1, m2, asg);
        if (!verdict.equilibrium) continue;
        matched = true;
        const auto outcome = outcome_distribution(m1, m2, asg);
        auto it = std::find_if(report.classes.begin(), report.classes.end(),
                               [&](const auto& c) { return total_variation(c.outcome, outcome) < 1e-9; });
        if (it != report.classes.end()) {
          ++it->hits;
        } else {
          report.classes.push_back({std::move(m1), std::move(m2), outcome, verdict.payoffs, 1});
        }
      }
      if (!matched && !eqs.empty()) {
        const auto m1 = detail::frame_mixture(f1, rows, eqs.front().row);
        const auto m2 = detail::frame_mixture(f2, cols, eqs.front().col);
        f1 = detail::eigen_frame(best_response_matrix(g, m2, Player::One, asg));
        f2 = detail::eigen_frame(best_response_matrix(g, m1, Player::Two, asg));
      }
    }
    if (!matched) ++report.unmatched;
  }
  std::sort(report.classes.begin(), report.classes.end(), [](const auto& x, const auto& y) {
    if (x.payoffs != y.payoffs) return x.payoffs > y.payoffs;
    return x.outcome < y.outcome;
  });
  return report;
}

}  // namespace qgt

#endif  // QGT_EWL_HPP
