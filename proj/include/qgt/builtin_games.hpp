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

#ifndef QGT_BUILTIN_GAMES_HPP
#define QGT_BUILTIN_GAMES_HPP

#include <memory>
#include <string>
#include <vector>

#include "qgt/environment.hpp"
#include "qgt/game.hpp"
#include "qgt/private_info.hpp"

namespace qgt::builtin {

/// Anti-coordination game with payoffs (2,1) and (1,2) off the diagonal.
inline Game ic3_game() { return Game("ic3", {"C", "D"}, {"C", "D"}, {{0, 0}, {2, 1}, {1, 2}, {0, 0}}); }

inline Game prisoners_dilemma() {
  return Game("prisoners-dilemma", {"C", "D"}, {"C", "D"}, {{3, 3}, {0, 5}, {5, 0}, {1, 1}});
}

/// W is uniform; X disagrees with W with probability 3/4 and Y with
/// probability 5/6, independently given W. Atoms are named by the triple
/// of values (X, Y, W).
inline Environment ic3_environment() {
  std::vector<std::string> atoms;
  std::vector<double> probs;
  std::vector<Label> xs, ys, ws;
  for (const Label w : {"C", "D"}) {
    for (const Label x : {"C", "D"}) {
      for (const Label y : {"C", "D"}) {
        const double px = x == w ? 1.0 / 4.0 : 3.0 / 4.0;
        const double py = y == w ? 1.0 / 6.0 : 5.0 / 6.0;
        atoms.push_back(x + y + w);
        probs.push_back(0.5 * px * py);
        xs.push_back(x);
        ys.push_back(y);
        ws.push_back(w);
      }
    }
  }
  auto space = std::make_shared<const SampleSpace>(std::move(atoms), std::move(probs));
  return Environment({"C", "D"}, {"C", "D"}, space,
                     {RandomVariable("X", space, xs, Player::One), RandomVariable("Y", space, ys, Player::One)},
                     {RandomVariable("W", space, ws, Player::Two)});
}

/// Coordinate when both observe red, anti-coordinate otherwise; types are
/// uniform and independent.
inline PrivateInfoGame iid1_game() {
  const Game red("both-red", {"C", "D"}, {"C", "D"}, {{1, 1}, {0, 0}, {0, 0}, {1, 1}});
  const Game green("either-green", {"C", "D"}, {"C", "D"}, {{0, 0}, {1, 1}, {1, 1}, {0, 0}});
  return PrivateInfoGame::from_cell_games("iid1", {"red", "green"}, {"red", "green"}, {0.25, 0.25, 0.25, 0.25},
                                          {red, green, green, green});
}

}  // namespace qgt::builtin

#endif  // QGT_BUILTIN_GAMES_HPP
