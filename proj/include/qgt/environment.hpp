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

#ifndef QGT_ENVIRONMENT_HPP
#define QGT_ENVIRONMENT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgt/error.hpp"
#include "qgt/game.hpp"

namespace qgt {

inline constexpr double kDefaultEquilibriumEpsilon = 1e-9;
inline constexpr std::size_t kMaxRelabelingMaps = 4096;

/// A finite probability space with named atoms.
class SampleSpace {
 public:
  SampleSpace(std::vector<std::string> atoms, std::vector<double> probs)
      : atoms_(std::move(atoms)), probs_(std::move(probs)) {
    if (atoms_.empty()) throw ValidationError("sample space has no atoms");
    if (atoms_.size() != probs_.size()) throw ValidationError("atom/probability count mismatch");
    std::set<std::string> ids(atoms_.begin(), atoms_.end());
    if (ids.size() != atoms_.size()) throw ValidationError("duplicate atom identifier");
    double total = 0.0;
    for (double p : probs_) {
      if (!std::isfinite(p) || p < 0.0) throw ValidationError("atom probability must be >= 0");
      total += p;
    }
    if (std::abs(total - 1.0) > kWeightTolerance) {
      throw ValidationError("atom probabilities sum to " + std::to_string(total) + ", not 1");
    }
  }

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return atoms_.size(); }

  bool operator==(const SampleSpace&) const = default;

 private:
  std::vector<std::string> atoms_;
  std::vector<double> probs_;
};

using SpacePtr = std::shared_ptr<const SampleSpace>;

enum class Player { One = 1, Two = 2 };

/// A strategy-valued random variable: one label per atom of its space.
struct RandomVariable {
  std::string name;
  SpacePtr space;
  std::vector<Label> values;
  Player target = Player::One;

  RandomVariable(std::string name_, SpacePtr space_, std::vector<Label> values_, Player target_)
      : name(std::move(name_)), space(std::move(space_)), values(std::move(values_)), target(target_) {
    if (!space) throw ValidationError("random variable '" + name + "' has no sample space");
    if (values.size() != space->size()) {
      throw ValidationError("random variable '" + name + "' must be defined on every atom");
    }
  }

  /// Deterministic variable taking `label` on every atom.
  static RandomVariable constant(std::string name, SpacePtr space, const Label& label, Player target) {
    std::vector<Label> values(space->size(), label);
    return RandomVariable(std::move(name), std::move(space), std::move(values), target);
  }
};

inline bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || *a == *b; }

/// Per-player lists of random variables on a common space, together with
/// the strategy sets they take values in.
struct Environment {
  LabelList strategies1;
  LabelList strategies2;
  SpacePtr space;
  std::vector<RandomVariable> vars1;
  std::vector<RandomVariable> vars2;

  Environment(LabelList s1, LabelList s2, SpacePtr space_, std::vector<RandomVariable> v1,
              std::vector<RandomVariable> v2)
      : strategies1(std::move(s1)),
        strategies2(std::move(s2)),
        space(std::move(space_)),
        vars1(std::move(v1)),
        vars2(std::move(v2)) {
    detail::check_labels(strategies1, "environment rows");
    detail::check_labels(strategies2, "environment cols");
    if (vars1.empty() || vars2.empty()) throw ValidationError("environment variable lists must be nonempty");
    check(vars1, strategies1, Player::One);
    check(vars2, strategies2, Player::Two);
  }

  const RandomVariable& find(Player who, const std::string& name) const {
    const auto& vars = who == Player::One ? vars1 : vars2;
    for (const auto& v : vars) {
      if (v.name == name) return v;
    }
    throw ValidationError("no variable named '" + name + "' for Player " +
                          std::to_string(static_cast<int>(who)));
  }

 private:
  void check(const std::vector<RandomVariable>& vars, const LabelList& labels, Player who) const {
    for (const auto& v : vars) {
      if (v.target != who) throw ValidationError("variable '" + v.name + "' targets the wrong player");
      if (!same_space(v.space, space)) {
        throw ValidationError("variable '" + v.name + "' lives on a different sample space");
      }
      for (const auto& s : v.values) detail::index_of(labels, s, "variable value");
    }
  }
};

/// Distribution of (x, y) on S1 x S2, summing atom probabilities.
inline JointDistribution joint_distribution(const RandomVariable& x, const RandomVariable& y) {
  if (!same_space(x.space, y.space)) {
    throw ValidationError("variables '" + x.name + "' and '" + y.name + "' live on different spaces");
  }
  if (x.target != Player::One || y.target != Player::Two) {
    throw ValidationError("joint_distribution expects a Player-1 and a Player-2 variable");
  }
  JointDistribution joint;
  const auto& probs = x.space->probs();
  for (std::size_t a = 0; a < probs.size(); ++a) {
    if (probs[a] > 0.0) joint[{x.values[a], y.values[a]}] += probs[a];
  }
  return joint;
}

inline PayoffPair env_payoff(const Game& g, const RandomVariable& x, const RandomVariable& y) {
  return expected_payoff(g, joint_distribution(x, y));
}

namespace detail {

// Every map S -> S as an index vector, lexicographic.
inline std::vector<std::vector<std::size_t>> all_self_maps(std::size_t n) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= n;
    if (count > kMaxRelabelingMaps) throw SizeLimitError("too many relabeling maps for closure");
  }
  std::vector<std::vector<std::size_t>> maps;
  maps.reserve(count);
  std::vector<std::size_t> sigma(n, 0);
  for (std::size_t m = 0; m < count; ++m) {
    maps.push_back(sigma);
    for (std::size_t pos = n; pos-- > 0;) {
      if (++sigma[pos] < n) break;
      sigma[pos] = 0;
    }
  }
  return maps;
}

inline std::string relabel_name(const std::string& base, const LabelList& labels,
                                const std::vector<std::size_t>& sigma) {
  bool identity = true, constant = true;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    identity = identity && sigma[i] == i;
    constant = constant && sigma[i] == sigma[0];
  }
  if (identity) return base;
  if (constant) return "const(" + labels[sigma[0]] + ")";
  std::string name = base + "{";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) name += ",";
    name += labels[i] + "->" + labels[sigma[i]];
  }
  return name + "}";
}

inline std::vector<RandomVariable> close_list(const std::vector<RandomVariable>& vars,
                                              const LabelList& labels) {
  std::vector<RandomVariable> out;
  const auto add = [&out](RandomVariable v) {
    for (const auto& w : out) {
      if (w.values == v.values) return;
    }
    out.push_back(std::move(v));
  };
  for (const auto& v : vars) add(v);
  const auto maps = all_self_maps(labels.size());
  for (const auto& v : vars) {
    for (const auto& sigma : maps) {
      std::vector<Label> values;
      values.reserve(v.values.size());
      for (const auto& s : v.values) values.push_back(labels[sigma[index_of(labels, s, "value")]]);
      add(RandomVariable(relabel_name(v.name, labels, sigma), v.space, std::move(values), v.target));
    }
  }
  return out;
}

}  // namespace detail

/// Closes both variable lists under composition with every self-map of the
/// player's strategy set. Originals keep their position; value-identical
/// duplicates are dropped, so closing twice is a no-op.
inline Environment close_environment(const Environment& e) {
  return Environment(e.strategies1, e.strategies2, e.space,
                     detail::close_list(e.vars1, e.strategies1),
                     detail::close_list(e.vars2, e.strategies2));
}

/// The game G(E): strategies are the variable names, payoffs are
/// expectations under the induced joint distributions.
inline Game env_game(const Game& g, const Environment& e) {
  LabelList rows, cols;
  for (const auto& v : e.vars1) rows.push_back(v.name);
  for (const auto& v : e.vars2) cols.push_back(v.name);
  std::vector<PayoffPair> table;
  table.reserve(rows.size() * cols.size());
  for (const auto& x : e.vars1) {
    for (const auto& y : e.vars2) table.push_back(env_payoff(g, x, y));
  }
  return Game(g.name() + "(E)", std::move(rows), std::move(cols), std::move(table));
}

struct EnvDeviation {
  Player player;
  std::string name;
  double payoff;
  double gain;
};

struct EnvVerdict {
  bool equilibrium = false;
  PayoffPair payoffs{};
  double gain1 = 0.0;
  double gain2 = 0.0;
  /// Most profitable deviation when rejected.
  std::optional<EnvDeviation> witness;
  /// Every deviation examined, Player 1's first.
  std::vector<EnvDeviation> deviations;
};

namespace detail {

inline bool contains_values(const std::vector<RandomVariable>& vars, const RandomVariable& v) {
  return std::any_of(vars.begin(), vars.end(), [&](const auto& w) { return w.values == v.values; });
}

inline void check_game_matches(const Game& g, const Environment& e) {
  if (g.strategies1() != e.strategies1 || g.strategies2() != e.strategies2) {
    throw ValidationError("environment strategy sets do not match the game");
  }
}

}  // namespace detail

/// Nash check of (x, y) in G(E) against every variable of the closed
/// environment. Profitable means gaining more than `eps`.
inline EnvVerdict is_env_nash(const Game& g, const Environment& e, const RandomVariable& x,
                              const RandomVariable& y, double eps = kDefaultEquilibriumEpsilon) {
  detail::check_game_matches(g, e);
  const Environment closed = close_environment(e);
  if (!same_space(x.space, e.space) || !same_space(y.space, e.space)) {
    throw ValidationError("profile variables must live on the environment's space");
  }
  if (!detail::contains_values(closed.vars1, x)) {
    throw ValidationError("'" + x.name + "' is not in the closure of Player 1's variables");
  }
  if (!detail::contains_values(closed.vars2, y)) {
    throw ValidationError("'" + y.name + "' is not in the closure of Player 2's variables");
  }
  EnvVerdict verdict;
  verdict.payoffs = env_payoff(g, x, y);
  std::optional<EnvDeviation> best1, best2;
  for (const auto& dev : closed.vars1) {
    const double u = env_payoff(g, dev, y).first;
    EnvDeviation d{Player::One, dev.name, u, u - verdict.payoffs.first};
    if (!best1 || d.payoff > best1->payoff) best1 = d;
    verdict.deviations.push_back(d);
  }
  for (const auto& dev : closed.vars2) {
    const double u = env_payoff(g, x, dev).second;
    EnvDeviation d{Player::Two, dev.name, u, u - verdict.payoffs.second};
    if (!best2 || d.payoff > best2->payoff) best2 = d;
    verdict.deviations.push_back(d);
  }
  verdict.gain1 = std::max(0.0, best1->gain);
  verdict.gain2 = std::max(0.0, best2->gain);
  verdict.equilibrium = verdict.gain1 <= eps && verdict.gain2 <= eps;
  if (!verdict.equilibrium) verdict.witness = verdict.gain1 >= verdict.gain2 ? best1 : best2;
  return verdict;
}

/// Correlated-equilibrium check: the environment is ({x}, {y}), so the
/// deviations are exactly the relabelings of each player's own signal.
inline EnvVerdict is_correlated_equilibrium(const Game& g, const RandomVariable& x,
                                            const RandomVariable& y,
                                            double eps = kDefaultEquilibriumEpsilon) {
  const Environment e(g.strategies1(), g.strategies2(), x.space, {x}, {y});
  return is_env_nash(g, e, x, y, eps);
}

struct ChainBound {
  double lhs;
  double rhs;
  bool holds;
};

/// P(x != w) against P(x != y) + P(y != z) + P(z != w) for binary variables.
inline ChainBound chain_disagreement_bound(const SampleSpace& space, const RandomVariable& x,
                                           const RandomVariable& y, const RandomVariable& z,
                                           const RandomVariable& w) {
  std::set<Label> alphabet;
  for (const auto* v : {&x, &y, &z, &w}) {
    if (v->values.size() != space.size()) {
      throw ValidationError("variable '" + v->name + "' is not defined on this space");
    }
    alphabet.insert(v->values.begin(), v->values.end());
  }
  if (alphabet.size() > 2) throw ValidationError("chain bound needs binary-valued variables");
  const auto differ = [&](const RandomVariable& a, const RandomVariable& b) {
    double p = 0.0;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (a.values[i] != b.values[i]) p += space.probs()[i];
    }
    return p;
  };
  ChainBound out{differ(x, w), differ(x, y) + differ(y, z) + differ(z, w), false};
  out.holds = out.lhs <= out.rhs + kPayoffTolerance;
  return out;
}

/// A joint distribution realized as a pair of variables on a space with one
/// atom per listed profile (zero-mass entries included).
struct Coupling {
  SpacePtr space;
  RandomVariable x;
  RandomVariable y;
};

inline Coupling realize_joint(const JointDistribution& joint) {
  std::vector<std::string> atoms;
  std::vector<double> probs;
  std::vector<Label> xs, ys;
  double total = 0.0;
  for (const auto& [profile, p] : joint) total += p;
  for (const auto& [profile, p] : joint) {
    atoms.push_back(profile.s1 + "," + profile.s2);
    probs.push_back(p / total);
    xs.push_back(profile.s1);
    ys.push_back(profile.s2);
  }
  auto space = std::make_shared<const SampleSpace>(std::move(atoms), std::move(probs));
  return Coupling{space, RandomVariable("X", space, std::move(xs), Player::One),
                  RandomVariable("Y", space, std::move(ys), Player::Two)};
}

}  // namespace qgt

#endif  // QGT_ENVIRONMENT_HPP
