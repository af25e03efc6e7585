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

#ifndef QGT_GAME_HPP
#define QGT_GAME_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgt/error.hpp"

namespace qgt {

inline constexpr double kPayoffTolerance = 1e-12;
inline constexpr double kWeightTolerance = 1e-12;

using Label = std::string;
using LabelList = std::vector<Label>;

/// (payoff to Player 1, payoff to Player 2).
using PayoffPair = std::pair<double, double>;

struct Profile {
  Label s1;
  Label s2;
  auto operator<=>(const Profile&) const = default;
};

/// Probability mass over strategy pairs. Absent profiles carry zero mass.
using JointDistribution = std::map<Profile, double>;

namespace detail {

inline void check_labels(const LabelList& labels, const char* which) {
  if (labels.empty()) throw ValidationError(std::string(which) + ": empty strategy list");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw ValidationError(std::string(which) + ": empty label");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) {
        throw ValidationError(std::string(which) + ": duplicate label '" + labels[i] + "'");
      }
    }
  }
}

inline std::size_t index_of(const LabelList& labels, const Label& label, const char* which) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw ValidationError(std::string("unknown ") + which + " label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace detail

/// A finite two-player normal-form game. Payoffs are stored row-major:
/// cell (i, j) pairs strategies1[i] with strategies2[j].
class Game {
 public:
  Game(std::string name, LabelList strategies1, LabelList strategies2,
       std::vector<PayoffPair> table)
      : name_(std::move(name)),
        strategies1_(std::move(strategies1)),
        strategies2_(std::move(strategies2)),
        table_(std::move(table)) {
    detail::check_labels(strategies1_, "rows");
    detail::check_labels(strategies2_, "cols");
    if (table_.size() != strategies1_.size() * strategies2_.size()) {
      throw ValidationError("payoff table has " + std::to_string(table_.size()) +
                            " cells, expected " +
                            std::to_string(strategies1_.size() * strategies2_.size()));
    }
    for (const auto& [a, b] : table_) {
      if (!std::isfinite(a) || !std::isfinite(b)) throw ValidationError("non-finite payoff");
    }
  }

  /// Builds a game from a cell map; every label pair must be present.
  static Game from_cells(std::string name, LabelList strategies1, LabelList strategies2,
                         const std::map<Profile, PayoffPair>& cells) {
    std::vector<PayoffPair> table;
    table.reserve(strategies1.size() * strategies2.size());
    for (const auto& r : strategies1) {
      for (const auto& c : strategies2) {
        auto it = cells.find({r, c});
        if (it == cells.end()) throw ValidationError("missing payoff for (" + r + "," + c + ")");
        table.push_back(it->second);
      }
    }
    if (cells.size() != table.size()) throw ValidationError("payoff cells reference unknown labels");
    return Game(std::move(name), std::move(strategies1), std::move(strategies2), std::move(table));
  }

  const std::string& name() const { return name_; }
  const LabelList& strategies1() const { return strategies1_; }
  const LabelList& strategies2() const { return strategies2_; }
  std::size_t rows() const { return strategies1_.size(); }
  std::size_t cols() const { return strategies2_.size(); }

  std::size_t row_index(const Label& s) const { return detail::index_of(strategies1_, s, "row"); }
  std::size_t col_index(const Label& s) const { return detail::index_of(strategies2_, s, "col"); }

  const PayoffPair& at(std::size_t i, std::size_t j) const { return table_[i * cols() + j]; }
  const std::vector<PayoffPair>& table() const { return table_; }

  bool operator==(const Game&) const = default;

 private:
  std::string name_;
  LabelList strategies1_;
  LabelList strategies2_;
  std::vector<PayoffPair> table_;
};

inline PayoffPair payoff(const Game& g, const Profile& p) {
  return g.at(g.row_index(p.s1), g.col_index(p.s2));
}

/// All pure Nash equilibria, row-major. Ties are kept.
inline std::vector<Profile> pure_nash(const Game& g) {
  std::vector<Profile> out;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const auto [u1, u2] = g.at(i, j);
      bool best = true;
      for (std::size_t k = 0; k < g.rows() && best; ++k) best = g.at(k, j).first <= u1 + kPayoffTolerance;
      for (std::size_t k = 0; k < g.cols() && best; ++k) best = g.at(i, k).second <= u2 + kPayoffTolerance;
      if (best) out.push_back({g.strategies1()[i], g.strategies2()[j]});
    }
  }
  return out;
}

/// A probability distribution over one player's strategy labels.
struct MixedStrategy {
  std::map<Label, double> weights;

  static MixedStrategy point(const Label& s) { return {{{s, 1.0}}}; }
  static MixedStrategy uniform(const LabelList& labels) {
    MixedStrategy m;
    for (const auto& s : labels) m.weights[s] = 1.0 / static_cast<double>(labels.size());
    return m;
  }
};

/// Dense weight vector aligned with `labels`. Throws unless every key is a
/// known label, every weight is nonnegative and the total is 1 (1e-12).
inline std::vector<double> weight_vector(const LabelList& labels, const MixedStrategy& m) {
  std::vector<double> w(labels.size(), 0.0);
  double total = 0.0;
  for (const auto& [label, weight] : m.weights) {
    if (!std::isfinite(weight) || weight < 0.0) {
      throw ValidationError("weight for '" + label + "' must be a nonnegative number");
    }
    w[detail::index_of(labels, label, "mixed-strategy")] += weight;
    total += weight;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw ValidationError("mixed-strategy weights sum to " + std::to_string(total) + ", not 1");
  }
  return w;
}

inline PayoffPair expected_payoff(const Game& g, const MixedStrategy& m1, const MixedStrategy& m2) {
  const auto x = weight_vector(g.strategies1(), m1);
  const auto y = weight_vector(g.strategies2(), m2);
  PayoffPair out{0.0, 0.0};
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const double w = x[i] * y[j];
      out.first += w * g.at(i, j).first;
      out.second += w * g.at(i, j).second;
    }
  }
  return out;
}

/// Expected payoff when play follows a joint distribution over profiles.
inline PayoffPair expected_payoff(const Game& g, const JointDistribution& joint) {
  PayoffPair out{0.0, 0.0};
  for (const auto& [profile, prob] : joint) {
    const auto [u1, u2] = payoff(g, profile);
    out.first += prob * u1;
    out.second += prob * u2;
  }
  return out;
}

/// Total-variation distance between two joint distributions.
inline double total_variation(const JointDistribution& a, const JointDistribution& b) {
  double sum = 0.0;
  for (const auto& [p, w] : a) {
    auto it = b.find(p);
    sum += std::abs(w - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [p, w] : b) {
    if (!a.contains(p)) sum += std::abs(w);
  }
  return 0.5 * sum;
}

/// The product distribution of two independent mixed strategies.
inline JointDistribution product_distribution(const Game& g, const MixedStrategy& m1,
                                              const MixedStrategy& m2) {
  const auto x = weight_vector(g.strategies1(), m1);
  const auto y = weight_vector(g.strategies2(), m2);
  JointDistribution joint;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (x[i] * y[j] > 0.0) joint[{g.strategies1()[i], g.strategies2()[j]}] = x[i] * y[j];
    }
  }
  return joint;
}

/// Marginal mixed strategies of a joint distribution, over all labels of g.
inline std::pair<MixedStrategy, MixedStrategy> marginals(const Game& g, const JointDistribution& joint) {
  std::pair<MixedStrategy, MixedStrategy> out;
  for (const auto& s : g.strategies1()) out.first.weights[s] = 0.0;
  for (const auto& s : g.strategies2()) out.second.weights[s] = 0.0;
  for (const auto& [profile, p] : joint) {
    g.row_index(profile.s1);
    g.col_index(profile.s2);
    out.first.weights[profile.s1] += p;
    out.second.weights[profile.s2] += p;
  }
  return out;
}

}  // namespace qgt

#endif  // QGT_GAME_HPP
