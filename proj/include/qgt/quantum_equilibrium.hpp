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

#ifndef QGT_QUANTUM_EQUILIBRIUM_HPP
#define QGT_QUANTUM_EQUILIBRIUM_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "qgt/circle_search.hpp"
#include "qgt/environment.hpp"
#include "qgt/error.hpp"
#include "qgt/game.hpp"
#include "qgt/private_info.hpp"
#include "qgt/quantum_state.hpp"

namespace qgt {

struct Angle {
  double radians;
};

struct OperatorIndex {
  std::size_t value;
};

/// A player's choice within a strategy family.
using StrategyParam = std::variant<Angle, OperatorIndex>;

/// The one-parameter family {M(theta)} of real rotations.
struct RotationFamily {};

using StrategyFamily = std::variant<RotationFamily, std::vector<UnitaryOp>>;

inline bool is_rotation_family(const StrategyFamily& f) { return std::holds_alternative<RotationFamily>(f); }

/// A shared state plus each player's family of local unitaries.
struct QuantumEnvironment {
  StateVector xi;
  StrategyFamily family1;
  StrategyFamily family2;

  QuantumEnvironment(StateVector xi_, StrategyFamily f1, StrategyFamily f2)
      : xi(std::move(xi_)), family1(std::move(f1)), family2(std::move(f2)) {
    check(family1, xi.n1());
    check(family2, xi.n2());
  }

  /// The entangled pair with the rotation family on both sides.
  static QuantumEnvironment rotation_environment() {
    return QuantumEnvironment(entangled_pair(), RotationFamily{}, RotationFamily{});
  }

  const StrategyFamily& family(Player who) const { return who == Player::One ? family1 : family2; }

  UnitaryOp resolve(Player who, const StrategyParam& param) const {
    const auto& fam = family(who);
    if (is_rotation_family(fam)) {
      if (!std::holds_alternative<Angle>(param)) throw ValidationError("rotation family expects an angle");
      return rotation(std::get<Angle>(param).radians);
    }
    const auto& ops = std::get<std::vector<UnitaryOp>>(fam);
    if (!std::holds_alternative<OperatorIndex>(param)) throw ValidationError("operator list expects an index");
    const std::size_t k = std::get<OperatorIndex>(param).value;
    if (k >= ops.size()) throw ValidationError("operator index out of range");
    return ops[k];
  }

 private:
  static void check(const StrategyFamily& fam, std::size_t n) {
    if (is_rotation_family(fam)) {
      if (n != 2) throw ValidationError("rotation family acts on two-dimensional factors only");
      return;
    }
    const auto& ops = std::get<std::vector<UnitaryOp>>(fam);
    if (ops.empty()) throw ValidationError("operator family is empty");
    for (const auto& op : ops) {
      if (op.dim() != n) throw ValidationError("operator dimension does not match the state factor");
    }
  }
};

namespace detail {

inline void check_game_dims(const Game& g, const QuantumEnvironment& qe) {
  if (g.rows() != qe.xi.n1() || g.cols() != qe.xi.n2()) {
    throw ValidationError("game strategy counts must match the state's factor dimensions");
  }
}

inline BasisDistribution outcome_distribution(const QuantumEnvironment& qe, const StrategyParam& u,
                                              const StrategyParam& v) {
  return measure_joint(apply_local(qe.xi, qe.resolve(Player::One, u), qe.resolve(Player::Two, v)));
}

}  // namespace detail

/// Basis outcome i of either factor plays that player's i-th strategy
/// (H -> first label, T -> second).
inline JointDistribution quantum_profile_joint(const Game& g, const QuantumEnvironment& qe,
                                               const StrategyParam& u, const StrategyParam& v) {
  detail::check_game_dims(g, qe);
  const auto d = detail::outcome_distribution(qe, u, v);
  JointDistribution joint;
  for (std::size_t i = 0; i < d.n1; ++i) {
    for (std::size_t j = 0; j < d.n2; ++j) joint[{g.strategies1()[i], g.strategies2()[j]}] = d(i, j);
  }
  return joint;
}

inline PayoffPair qgame_payoff(const Game& g, const QuantumEnvironment& qe, const StrategyParam& u,
                               const StrategyParam& v) {
  detail::check_game_dims(g, qe);
  const auto d = detail::outcome_distribution(qe, u, v);
  PayoffPair out{0.0, 0.0};
  for (std::size_t i = 0; i < d.n1; ++i) {
    for (std::size_t j = 0; j < d.n2; ++j) {
      out.first += d(i, j) * g.at(i, j).first;
      out.second += d(i, j) * g.at(i, j).second;
    }
  }
  return out;
}

struct QuantumResponse {
  StrategyParam param;
  double value;
};

/// Best rotation angle for `who` against a fixed opponent parameter.
inline CircleMax best_response_rotation(const Game& g, const QuantumEnvironment& qe,
                                        const StrategyParam& opponent, Player who) {
  if (!is_rotation_family(qe.family(who))) {
    throw ValidationError("best_response_rotation needs the rotation family for the responding player");
  }
  detail::check_game_dims(g, qe);
  const auto direct = [&](double t) {
    return who == Player::One ? qgame_payoff(g, qe, Angle{t}, opponent).first
                              : qgame_payoff(g, qe, opponent, Angle{t}).second;
  };
  // Amplitudes are linear in (cos t, sin t), so the payoff is
  // a + b cos 2t + c sin 2t exactly; three samples fix the coefficients.
  const double f0 = direct(0.0), f1 = direct(std::numbers::pi / 4), f2 = direct(std::numbers::pi / 2);
  const double a = (f0 + f2) / 2, b = (f0 - f2) / 2, c = f1 - a;
  return maximize_on_circle([&](double t) { return a + b * std::cos(2 * t) + c * std::sin(2 * t); });
}

/// Best response within either family kind; finite families are enumerated
/// and the first maximizer wins ties.
inline QuantumResponse best_response(const Game& g, const QuantumEnvironment& qe,
                                     const StrategyParam& opponent, Player who) {
  if (is_rotation_family(qe.family(who))) {
    const auto r = best_response_rotation(g, qe, opponent, who);
    return {Angle{r.angle}, r.value};
  }
  const auto& ops = std::get<std::vector<UnitaryOp>>(qe.family(who));
  std::optional<QuantumResponse> best;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const auto u = who == Player::One ? qgame_payoff(g, qe, OperatorIndex{k}, opponent).first
                                      : qgame_payoff(g, qe, opponent, OperatorIndex{k}).second;
    if (!best || u > best->value + kPayoffTolerance) best = QuantumResponse{OperatorIndex{k}, u};
  }
  return *best;
}

struct QuantumDeviation {
  Player player;
  StrategyParam param;
  double payoff;
  double gain;
};

struct QuantumVerdict {
  bool equilibrium = false;
  PayoffPair payoffs{};
  QuantumDeviation best1{Player::One, Angle{0.0}, 0.0, 0.0};
  QuantumDeviation best2{Player::Two, Angle{0.0}, 0.0, 0.0};
  std::optional<QuantumDeviation> witness;
};

inline QuantumVerdict is_quantum_equilibrium(const Game& g, const QuantumEnvironment& qe,
                                             const StrategyParam& u, const StrategyParam& v,
                                             double eps = kDefaultEquilibriumEpsilon) {
  QuantumVerdict verdict;
  verdict.payoffs = qgame_payoff(g, qe, u, v);
  const auto r1 = best_response(g, qe, v, Player::One);
  const auto r2 = best_response(g, qe, u, Player::Two);
  verdict.best1 = {Player::One, r1.param, r1.value, std::max(0.0, r1.value - verdict.payoffs.first)};
  verdict.best2 = {Player::Two, r2.param, r2.value, std::max(0.0, r2.value - verdict.payoffs.second)};
  verdict.equilibrium = verdict.best1.gain <= eps && verdict.best2.gain <= eps;
  if (!verdict.equilibrium) verdict.witness = verdict.best1.gain >= verdict.best2.gain ? verdict.best1 : verdict.best2;
  return verdict;
}

/// Realizes the profile's outcome law as a classical coupling and runs the
/// correlated-equilibrium check on it.
inline EnvVerdict quantum_profile_is_correlated(const Game& g, const QuantumEnvironment& qe,
                                                const StrategyParam& u, const StrategyParam& v,
                                                double eps = kDefaultEquilibriumEpsilon) {
  const auto coupling = realize_joint(quantum_profile_joint(g, qe, u, v));
  return is_correlated_equilibrium(g, coupling.x, coupling.y, eps);
}

namespace detail {

inline std::string angle_name(double radians) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), radians);
  return "rotation " + std::string(buf, res.ptr);
}

/// Payoff to `who` when they play `param` and relabel the measured outcome
/// by `sigma`, the opponent's parameter held fixed.
inline double relabeled_payoff(const Game& g, const QuantumEnvironment& qe, const StrategyParam& param,
                               const StrategyParam& opponent, Player who, const std::vector<std::size_t>& sigma) {
  const auto d = who == Player::One ? outcome_distribution(qe, param, opponent) : outcome_distribution(qe, opponent, param);
  double u = 0.0;
  for (std::size_t i = 0; i < d.n1; ++i) {
    for (std::size_t j = 0; j < d.n2; ++j) {
      u += who == Player::One ? d(i, j) * g.at(sigma[i], j).first : d(i, j) * g.at(i, sigma[j]).second;
    }
  }
  return u;
}

inline std::vector<EnvDeviation> closed_deviations(const Game& g, const QuantumEnvironment& qe,
                                                   const StrategyParam& opponent, Player who, double current) {
  const auto& labels = who == Player::One ? g.strategies1() : g.strategies2();
  const auto maps = all_self_maps(labels.size());
  std::vector<EnvDeviation> out;
  const auto push = [&](std::string name, double u) {
    out.push_back({who, std::move(name), u, std::max(0.0, u - current)});
  };
  if (is_rotation_family(qe.family(who))) {
    // A rotation by pi/2 swaps the two outcomes, so rotations cover every
    // bijective relabeling; only the constant maps remain.
    const auto r = best_response_rotation(g, qe, opponent, who);
    push(angle_name(r.angle), r.value);
    for (const auto& sigma : maps) {
      if (sigma[0] != sigma[1]) continue;
      push(relabel_name("", labels, sigma), relabeled_payoff(g, qe, Angle{0.0}, opponent, who, sigma));
    }
    return out;
  }
  const auto& ops = std::get<std::vector<UnitaryOp>>(qe.family(who));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    for (const auto& sigma : maps) {
      push(relabel_name("op " + std::to_string(k), labels, sigma),
           relabeled_payoff(g, qe, OperatorIndex{k}, opponent, who, sigma));
    }
  }
  return out;
}

}  // namespace detail

/// Equilibrium check in the environment closed under relabeling: a player
/// may follow any family member with any map of the measured outcome to
/// their strategy set. Acceptance here implies the outcome law is a
/// correlated equilibrium.
inline EnvVerdict is_closed_quantum_equilibrium(const Game& g, const QuantumEnvironment& qe,
                                                const StrategyParam& u, const StrategyParam& v,
                                                double eps = kDefaultEquilibriumEpsilon) {
  detail::check_game_dims(g, qe);
  EnvVerdict verdict;
  verdict.payoffs = qgame_payoff(g, qe, u, v);
  verdict.deviations = detail::closed_deviations(g, qe, v, Player::One, verdict.payoffs.first);
  const auto second = detail::closed_deviations(g, qe, u, Player::Two, verdict.payoffs.second);
  verdict.deviations.insert(verdict.deviations.end(), second.begin(), second.end());
  for (const auto& dev : verdict.deviations) {
    double& gain = dev.player == Player::One ? verdict.gain1 : verdict.gain2;
    gain = std::max(gain, dev.gain);
    if (!verdict.witness || dev.gain > verdict.witness->gain) verdict.witness = dev;
  }
  verdict.equilibrium = verdict.gain1 <= eps && verdict.gain2 <= eps;
  if (verdict.equilibrium) verdict.witness.reset();
  return verdict;
}

/// Two profiles are equivalent when they induce the same outcome law.
struct QuantumEquilibriumClass {
  double theta;
  double phi;
  JointDistribution joint;
  PayoffPair payoffs;
  std::size_t hits;
};

struct QuantumSearchReport {
  std::vector<QuantumEquilibriumClass> classes;
  std::size_t starts;
  std::size_t unconverged;
  std::uint64_t seed;
};

/// Alternating best responses from random starting angles, for
/// rotation families on both sides. Not exhaustive.
inline QuantumSearchReport search_quantum_equilibria(const Game& g, const QuantumEnvironment& qe,
                                                     std::size_t starts, std::uint64_t seed,
                                                     std::size_t max_rounds = 32) {
  if (!is_rotation_family(qe.family1) || !is_rotation_family(qe.family2)) {
    throw ValidationError("equilibrium search needs rotation families");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  QuantumSearchReport report{{}, starts, 0, seed};
  for (std::size_t s = 0; s < starts; ++s) {
    double theta = angle(rng), phi = angle(rng);
    bool converged = false;
    for (std::size_t round = 0; round < max_rounds && !converged; ++round) {
      theta = best_response_rotation(g, qe, Angle{phi}, Player::One).angle;
      phi = best_response_rotation(g, qe, Angle{theta}, Player::Two).angle;
      converged = is_quantum_equilibrium(g, qe, Angle{theta}, Angle{phi}).equilibrium;
    }
    if (!converged) {
      ++report.unconverged;
      continue;
    }
    auto joint = quantum_profile_joint(g, qe, Angle{theta}, Angle{phi});
    auto it = std::find_if(report.classes.begin(), report.classes.end(),
                           [&](const auto& c) { return total_variation(c.joint, joint) < 1e-9; });
    if (it != report.classes.end()) {
      ++it->hits;
      continue;
    }
    const auto payoffs = qgame_payoff(g, qe, Angle{theta}, Angle{phi});
    report.classes.push_back({theta, phi, std::move(joint), payoffs, 1});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Private information played in a quantum environment.

/// One strategy parameter per type, in the order of the player's info list.
struct InfoStrategy {
  std::vector<StrategyParam> per_type;

  static InfoStrategy angles(std::initializer_list<double> radians) {
    InfoStrategy s;
    for (double r : radians) s.per_type.push_back(Angle{r});
    return s;
  }
};

namespace detail {

struct PrivateQuantumSetup {
  std::vector<Game> cells;  // row-major over (info1, info2)
};

inline PrivateQuantumSetup private_setup(const PrivateInfoGame& pg, const QuantumEnvironment& qe,
                                         const InfoStrategy& f1, const InfoStrategy& f2) {
  if (f1.per_type.size() != pg.info1().size() || f2.per_type.size() != pg.info2().size()) {
    throw ValidationError("info strategy must assign a parameter to every type");
  }
  PrivateQuantumSetup s;
  for (std::size_t a1 = 0; a1 < pg.info1().size(); ++a1) {
    for (std::size_t a2 = 0; a2 < pg.info2().size(); ++a2) s.cells.push_back(pg.cell_game(a1, a2));
  }
  check_game_dims(s.cells.front(), qe);
  return s;
}

// Player `who`'s payoff contribution from its own type `a` when playing `own`.
inline double type_objective(const PrivateInfoGame& pg, const QuantumEnvironment& qe,
                             const PrivateQuantumSetup& setup, Player who, std::size_t a,
                             const StrategyParam& own, const InfoStrategy& other) {
  double total = 0.0;
  const std::size_t n2 = pg.info2().size();
  if (who == Player::One) {
    for (std::size_t b = 0; b < n2; ++b) {
      const double w = pg.type_prob(a, b);
      if (w != 0.0) total += w * qgame_payoff(setup.cells[a * n2 + b], qe, own, other.per_type[b]).first;
    }
  } else {
    for (std::size_t b = 0; b < pg.info1().size(); ++b) {
      const double w = pg.type_prob(b, a);
      if (w != 0.0) total += w * qgame_payoff(setup.cells[b * n2 + a], qe, other.per_type[b], own).second;
    }
  }
  return total;
}

}  // namespace detail

/// Expected payoffs: per type cell, the quantum game payoff of the assigned
/// parameters, averaged under the type distribution.
inline PayoffPair private_quantum_payoff(const PrivateInfoGame& pg, const QuantumEnvironment& qe,
                                         const InfoStrategy& f1, const InfoStrategy& f2) {
  const auto setup = detail::private_setup(pg, qe, f1, f2);
  PayoffPair out{0.0, 0.0};
  const std::size_t n2 = pg.info2().size();
  for (std::size_t a1 = 0; a1 < pg.info1().size(); ++a1) {
    for (std::size_t a2 = 0; a2 < n2; ++a2) {
      const double w = pg.type_prob(a1, a2);
      const auto u = qgame_payoff(setup.cells[a1 * n2 + a2], qe, f1.per_type[a1], f2.per_type[a2]);
      out.first += w * u.first;
      out.second += w * u.second;
    }
  }
  return out;
}

struct TypeResponse {
  std::string type;
  double current;
  double best_angle;
  double best_value;
  double gain;
};

struct PrivateQuantumVerdict {
  bool equilibrium = false;
  PayoffPair payoffs{};
  std::vector<TypeResponse> responses1;
  std::vector<TypeResponse> responses2;
  double gain1 = 0.0;
  double gain2 = 0.0;
  /// Most profitable single-type deviation when rejected.
  std::optional<std::pair<Player, TypeResponse>> witness;
};

namespace detail {

inline std::vector<TypeResponse> type_best_responses(const PrivateInfoGame& pg, const QuantumEnvironment& qe,
                                                     const PrivateQuantumSetup& setup, Player who,
                                                     const InfoStrategy& own, const InfoStrategy& other) {
  const auto& types = who == Player::One ? pg.info1() : pg.info2();
  std::vector<TypeResponse> out;
  for (std::size_t a = 0; a < types.size(); ++a) {
    const double current = type_objective(pg, qe, setup, who, a, own.per_type[a], other);
    const auto best = maximize_on_circle(
        [&](double t) { return type_objective(pg, qe, setup, who, a, Angle{t}, other); });
    out.push_back({types[a], current, best.angle, best.value, std::max(0.0, best.value - current)});
  }
  return out;
}

}  // namespace detail

/// A player's payoff separates over its own types, so each type's
/// one-dimensional objective is maximized independently. Accepts iff each
/// player's summed gain is at most `eps`.
inline PrivateQuantumVerdict is_private_quantum_equilibrium(const PrivateInfoGame& pg,
                                                            const QuantumEnvironment& qe,
                                                            const InfoStrategy& f1, const InfoStrategy& f2,
                                                            double eps = kDefaultEquilibriumEpsilon) {
  if (!is_rotation_family(qe.family1) || !is_rotation_family(qe.family2)) {
    throw ValidationError("private quantum equilibrium check needs rotation families");
  }
  const auto setup = detail::private_setup(pg, qe, f1, f2);
  PrivateQuantumVerdict v;
  v.payoffs = private_quantum_payoff(pg, qe, f1, f2);
  v.responses1 = detail::type_best_responses(pg, qe, setup, Player::One, f1, f2);
  v.responses2 = detail::type_best_responses(pg, qe, setup, Player::Two, f2, f1);
  for (const auto& r : v.responses1) v.gain1 += r.gain;
  for (const auto& r : v.responses2) v.gain2 += r.gain;
  v.equilibrium = v.gain1 <= eps && v.gain2 <= eps;
  if (!v.equilibrium) {
    for (const auto& [who, list] : {std::pair{Player::One, &v.responses1}, std::pair{Player::Two, &v.responses2}}) {
      for (const auto& r : *list) {
        if (!v.witness || r.gain > v.witness->second.gain) v.witness = std::pair{who, r};
      }
    }
  }
  return v;
}

struct ClassicalBound {
  double value;
  /// Players' payoffs differ somewhere; the bound is for Player 1.
  bool asymmetric;
  Profile argmax;
};

/// Best symmetric payoff over pure behavioral profiles. Any classical play,
/// correlated or not, mixes these profiles, so it is an upper bound there.
inline ClassicalBound classical_value_bound(const PrivateInfoGame& pg) {
  const Game sharp = sharp_game(pg);
  ClassicalBound out{sharp.at(0, 0).first, !pg.symmetric_payoffs(),
                     {sharp.strategies1()[0], sharp.strategies2()[0]}};
  for (std::size_t i = 0; i < sharp.rows(); ++i) {
    for (std::size_t j = 0; j < sharp.cols(); ++j) {
      if (sharp.at(i, j).first > out.value) {
        out.value = sharp.at(i, j).first;
        out.argmax = {sharp.strategies1()[i], sharp.strategies2()[j]};
      }
    }
  }
  return out;
}

struct PrivateEquilibriumClass {
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<JointDistribution> cell_joints;  // row-major over type cells
  PayoffPair payoffs;
  std::size_t hits;
};

struct PrivateSearchReport {
  std::vector<PrivateEquilibriumClass> classes;
  std::size_t starts;
  std::size_t unconverged;
  std::uint64_t seed;
};

/// Alternating per-type best responses from random angle assignments.
/// Profiles are grouped when every type cell induces the same outcome law.
/// Not exhaustive.
inline PrivateSearchReport search_private_quantum_equilibria(const PrivateInfoGame& pg,
                                                             const QuantumEnvironment& qe, std::size_t starts,
                                                             std::uint64_t seed, std::size_t max_rounds = 64) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  PrivateSearchReport report{{}, starts, 0, seed};
  const auto draw = [&](std::size_t n) {
    InfoStrategy s;
    for (std::size_t k = 0; k < n; ++k) s.per_type.push_back(Angle{angle(rng)});
    return s;
  };
  for (std::size_t s = 0; s < starts; ++s) {
    InfoStrategy f1 = draw(pg.info1().size()), f2 = draw(pg.info2().size());
    const auto setup = detail::private_setup(pg, qe, f1, f2);
    bool converged = false;
    for (std::size_t round = 0; round < max_rounds && !converged; ++round) {
      auto r1 = detail::type_best_responses(pg, qe, setup, Player::One, f1, f2);
      for (std::size_t a = 0; a < r1.size(); ++a) {
        if (r1[a].gain > 0.0) f1.per_type[a] = Angle{r1[a].best_angle};
      }
      auto r2 = detail::type_best_responses(pg, qe, setup, Player::Two, f2, f1);
      for (std::size_t a = 0; a < r2.size(); ++a) {
        if (r2[a].gain > 0.0) f2.per_type[a] = Angle{r2[a].best_angle};
      }
      converged = is_private_quantum_equilibrium(pg, qe, f1, f2).equilibrium;
    }
    if (!converged) {
      ++report.unconverged;
      continue;
    }
    std::vector<JointDistribution> joints;
    for (std::size_t a1 = 0; a1 < pg.info1().size(); ++a1) {
      for (std::size_t a2 = 0; a2 < pg.info2().size(); ++a2) {
        joints.push_back(quantum_profile_joint(setup.cells[a1 * pg.info2().size() + a2], qe, f1.per_type[a1],
                                               f2.per_type[a2]));
      }
    }
    auto it = std::find_if(report.classes.begin(), report.classes.end(), [&](const auto& c) {
      for (std::size_t k = 0; k < joints.size(); ++k) {
        if (total_variation(c.cell_joints[k], joints[k]) >= 1e-9) return false;
      }
      return true;
    });
    if (it != report.classes.end()) {
      ++it->hits;
      continue;
    }
    PrivateEquilibriumClass cls{{}, {}, std::move(joints), private_quantum_payoff(pg, qe, f1, f2), 1};
    for (const auto& p : f1.per_type) cls.theta.push_back(std::get<Angle>(p).radians);
    for (const auto& p : f2.per_type) cls.phi.push_back(std::get<Angle>(p).radians);
    report.classes.push_back(std::move(cls));
  }
  return report;
}

}  // namespace qgt

#endif  // QGT_QUANTUM_EQUILIBRIUM_HPP
