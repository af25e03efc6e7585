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

#ifndef QGT_PRIVATE_INFO_HPP
#define QGT_PRIVATE_INFO_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qgt/environment.hpp"
#include "qgt/error.hpp"
#include "qgt/game.hpp"

namespace qgt {

inline constexpr std::size_t kMaxSharpStrategies = 4096;

/// A two-player game whose payoffs depend on privately observed types.
class PrivateInfoGame {
 public:
  /// `type_dist` is row-major over (info1, info2). `payoffs` is indexed
  /// ((a1 * |info2| + a2) * |S1| + s1) * |S2| + s2.
  PrivateInfoGame(std::string name, LabelList info1, LabelList info2, std::vector<double> type_dist,
                  LabelList strategies1, LabelList strategies2, std::vector<PayoffPair> payoffs)
      : name_(std::move(name)),
        info1_(std::move(info1)),
        info2_(std::move(info2)),
        type_dist_(std::move(type_dist)),
        strategies1_(std::move(strategies1)),
        strategies2_(std::move(strategies2)),
        payoffs_(std::move(payoffs)) {
    detail::check_labels(info1_, "info1");
    detail::check_labels(info2_, "info2");
    detail::check_labels(strategies1_, "strategies1");
    detail::check_labels(strategies2_, "strategies2");
    if (type_dist_.size() != info1_.size() * info2_.size()) {
      throw ValidationError("type distribution has the wrong number of cells");
    }
    double total = 0.0;
    for (double p : type_dist_) {
      if (!std::isfinite(p) || p < 0.0) throw ValidationError("type probabilities must be >= 0");
      total += p;
    }
    if (std::abs(total - 1.0) > kWeightTolerance) throw ValidationError("type distribution must sum to 1");
    if (payoffs_.size() != type_dist_.size() * strategies1_.size() * strategies2_.size()) {
      throw ValidationError("private-information payoff table is not total");
    }
  }

  /// One payoff table per type cell, row-major over (info1, info2). All
  /// tables must share strategy labels.
  static PrivateInfoGame from_cell_games(std::string name, LabelList info1, LabelList info2,
                                         std::vector<double> type_dist, const std::vector<Game>& cells) {
    if (cells.empty() || cells.size() != info1.size() * info2.size()) {
      throw ValidationError("need one payoff table per type cell");
    }
    std::vector<PayoffPair> payoffs;
    for (const auto& c : cells) {
      if (c.strategies1() != cells[0].strategies1() || c.strategies2() != cells[0].strategies2()) {
        throw ValidationError("type-cell tables disagree on strategy labels");
      }
      payoffs.insert(payoffs.end(), c.table().begin(), c.table().end());
    }
    return PrivateInfoGame(std::move(name), std::move(info1), std::move(info2), std::move(type_dist),
                           cells[0].strategies1(), cells[0].strategies2(), std::move(payoffs));
  }

  const std::string& name() const { return name_; }
  const LabelList& info1() const { return info1_; }
  const LabelList& info2() const { return info2_; }
  const LabelList& strategies1() const { return strategies1_; }
  const LabelList& strategies2() const { return strategies2_; }
  const std::vector<double>& type_dist() const { return type_dist_; }

  double type_prob(std::size_t a1, std::size_t a2) const { return type_dist_[a1 * info2_.size() + a2]; }

  const PayoffPair& at(std::size_t a1, std::size_t a2, std::size_t s1, std::size_t s2) const {
    return payoffs_[((a1 * info2_.size() + a2) * strategies1_.size() + s1) * strategies2_.size() + s2];
  }

  Game cell_game(std::size_t a1, std::size_t a2) const {
    const std::size_t cell = strategies1_.size() * strategies2_.size();
    const auto first = payoffs_.begin() + static_cast<std::ptrdiff_t>((a1 * info2_.size() + a2) * cell);
    return Game(name_ + "[" + info1_[a1] + "," + info2_[a2] + "]", strategies1_, strategies2_,
                std::vector<PayoffPair>(first, first + static_cast<std::ptrdiff_t>(cell)));
  }

  /// Payoffs to both players agree in every cell.
  bool symmetric_payoffs() const {
    return std::all_of(payoffs_.begin(), payoffs_.end(),
                       [](const PayoffPair& p) { return std::abs(p.first - p.second) <= kPayoffTolerance; });
  }

 private:
  std::string name_;
  LabelList info1_;
  LabelList info2_;
  std::vector<double> type_dist_;
  LabelList strategies1_;
  LabelList strategies2_;
  std::vector<PayoffPair> payoffs_;
};

/// A behavioral map from a player's types to indices into some target list.
using BehavioralMap = std::vector<std::size_t>;

namespace detail {

inline std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    n *= base;
    if (n > kMaxSharpStrategies) {
      throw SizeLimitError("more than " + std::to_string(kMaxSharpStrategies) + " behavioral maps");
    }
  }
  return n;
}

}  // namespace detail

/// Every map from `types` into `targets`, lexicographic with the first type
/// most significant.
inline std::vector<BehavioralMap> all_maps(std::size_t types, std::size_t targets) {
  const std::size_t count = detail::checked_power(targets, types);
  std::vector<BehavioralMap> out;
  out.reserve(count);
  BehavioralMap f(types, 0);
  for (std::size_t m = 0; m < count; ++m) {
    out.push_back(f);
    for (std::size_t pos = types; pos-- > 0;) {
      if (++f[pos] < targets) break;
      f[pos] = 0;
    }
  }
  return out;
}

/// Canonical label of a map, e.g. "{red:C,green:D}".
inline std::string map_label(const LabelList& types, const LabelList& targets, const BehavioralMap& f) {
  std::string s = "{";
  for (std::size_t a = 0; a < types.size(); ++a) {
    if (a) s += ",";
    s += types[a] + ":" + targets[f[a]];
  }
  return s + "}";
}

/// The ordinary game whose strategies are maps from types to strategies and
/// whose payoffs average the cell payoffs over the type distribution.
inline Game sharp_game(const PrivateInfoGame& pg) {
  const auto maps1 = all_maps(pg.info1().size(), pg.strategies1().size());
  const auto maps2 = all_maps(pg.info2().size(), pg.strategies2().size());
  LabelList rows, cols;
  for (const auto& f : maps1) rows.push_back(map_label(pg.info1(), pg.strategies1(), f));
  for (const auto& f : maps2) cols.push_back(map_label(pg.info2(), pg.strategies2(), f));
  std::vector<PayoffPair> table;
  table.reserve(maps1.size() * maps2.size());
  for (const auto& f1 : maps1) {
    for (const auto& f2 : maps2) {
      PayoffPair u{0.0, 0.0};
      for (std::size_t a1 = 0; a1 < pg.info1().size(); ++a1) {
        for (std::size_t a2 = 0; a2 < pg.info2().size(); ++a2) {
          const double w = pg.type_prob(a1, a2);
          const auto& cell = pg.at(a1, a2, f1[a1], f2[a2]);
          u.first += w * cell.first;
          u.second += w * cell.second;
        }
      }
      table.push_back(u);
    }
  }
  return Game(pg.name() + "#", std::move(rows), std::move(cols), std::move(table));
}

namespace detail {

inline std::vector<RandomVariable> lift_variables(const std::vector<RandomVariable>& vars,
                                                  const LabelList& types, const LabelList& strategies,
                                                  const SpacePtr& space, Player who) {
  LabelList var_names;
  for (const auto& v : vars) var_names.push_back(v.name);
  std::vector<std::vector<std::size_t>> value_index(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k) {
    for (const auto& s : vars[k].values) value_index[k].push_back(index_of(strategies, s, "value"));
  }
  std::vector<RandomVariable> out;
  for (const auto& f : all_maps(types.size(), vars.size())) {
    std::vector<Label> values;
    values.reserve(space->size());
    BehavioralMap realized(types.size());
    for (std::size_t atom = 0; atom < space->size(); ++atom) {
      for (std::size_t a = 0; a < types.size(); ++a) realized[a] = value_index[f[a]][atom];
      values.push_back(map_label(types, strategies, realized));
    }
    out.emplace_back(map_label(types, var_names, f), space, std::move(values), who);
  }
  return out;
}

}  // namespace detail

/// Lifts E to the sharp game: each map from types to variables becomes a
/// variable valued in maps from types to strategies, atom by atom.
inline Environment sharp_environment(const Environment& e, const PrivateInfoGame& pg) {
  if (e.strategies1 != pg.strategies1() || e.strategies2 != pg.strategies2()) {
    throw ValidationError("environment strategy sets do not match the private-information game");
  }
  LabelList sharp1, sharp2;
  for (const auto& f : all_maps(pg.info1().size(), pg.strategies1().size())) {
    sharp1.push_back(map_label(pg.info1(), pg.strategies1(), f));
  }
  for (const auto& f : all_maps(pg.info2().size(), pg.strategies2().size())) {
    sharp2.push_back(map_label(pg.info2(), pg.strategies2(), f));
  }
  return Environment(std::move(sharp1), std::move(sharp2), e.space,
                     detail::lift_variables(e.vars1, pg.info1(), pg.strategies1(), e.space, Player::One),
                     detail::lift_variables(e.vars2, pg.info2(), pg.strategies2(), e.space, Player::Two));
}

/// Replaces strategies with the environment's variables: the payoff in each
/// type cell is the expectation under the variables' joint distribution.
inline PrivateInfoGame game_of_env(const PrivateInfoGame& pg, const Environment& e) {
  if (e.strategies1 != pg.strategies1() || e.strategies2 != pg.strategies2()) {
    throw ValidationError("environment strategy sets do not match the private-information game");
  }
  std::vector<Game> cells;
  for (std::size_t a1 = 0; a1 < pg.info1().size(); ++a1) {
    for (std::size_t a2 = 0; a2 < pg.info2().size(); ++a2) cells.push_back(env_game(pg.cell_game(a1, a2), e));
  }
  return PrivateInfoGame::from_cell_games(pg.name() + "(E)", pg.info1(), pg.info2(), pg.type_dist(), cells);
}

struct CommuteReport {
  double max_abs_diff;
  bool holds;
  std::size_t profiles;
};

/// Compares G(E)# with G#(E#) profile by profile.
inline CommuteReport check_commute(const PrivateInfoGame& pg, const Environment& e) {
  const Game lhs = sharp_game(game_of_env(pg, e));
  const Game rhs = env_game(sharp_game(pg), sharp_environment(e, pg));
  if (lhs.strategies1() != rhs.strategies1() || lhs.strategies2() != rhs.strategies2()) {
    throw InternalError("behavioral-map bijection mismatch between G(E)# and G#(E#)");
  }
  double diff = 0.0;
  for (std::size_t k = 0; k < lhs.table().size(); ++k) {
    diff = std::max({diff, std::abs(lhs.table()[k].first - rhs.table()[k].first),
                     std::abs(lhs.table()[k].second - rhs.table()[k].second)});
  }
  return {diff, diff <= kPayoffTolerance, lhs.table().size()};
}

struct PrivateInstance {
  PrivateInfoGame game;
  Environment env;
};

/// Random small instance: at most 2 types and exactly 2 strategies per
/// player, at most 3 variables per player, at most 8 atoms.
inline PrivateInstance random_private_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> types(1, 2), vars(1, 3), atoms(1, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0), pay(-5.0, 5.0);
  const auto labels = [](const char* prefix, std::size_t n) {
    LabelList out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
  };
  const auto simplex = [&](std::size_t n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (double& x : w) total += (x = unit(rng) + 1e-3);
    for (double& x : w) x /= total;
    return w;
  };
  const LabelList strategies{"C", "D"};
  const auto info1 = labels("a", types(rng));
  const auto info2 = labels("b", types(rng));
  std::vector<PayoffPair> payoffs(info1.size() * info2.size() * 4);
  for (auto& p : payoffs) p = {pay(rng), pay(rng)};
  PrivateInfoGame pg("random", info1, info2, simplex(info1.size() * info2.size()), strategies, strategies,
                     std::move(payoffs));
  const std::size_t n_atoms = atoms(rng);
  auto space = std::make_shared<const SampleSpace>(labels("w", n_atoms), simplex(n_atoms));
  std::bernoulli_distribution coin(0.5);
  const auto draw_vars = [&](const char* prefix, Player who) {
    std::vector<RandomVariable> out;
    const std::size_t n = vars(rng);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Label> values;
      for (std::size_t a = 0; a < n_atoms; ++a) values.push_back(strategies[coin(rng) ? 1 : 0]);
      out.emplace_back(prefix + std::to_string(k), space, std::move(values), who);
    }
    return out;
  };
  auto v1 = draw_vars("X", Player::One);
  auto v2 = draw_vars("Y", Player::Two);
  return {std::move(pg), Environment(strategies, strategies, space, std::move(v1), std::move(v2))};
}

}  // namespace qgt

#endif  // QGT_PRIVATE_INFO_HPP
