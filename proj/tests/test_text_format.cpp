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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qgt/builtin_games.hpp"
#include "qgt/text_format.hpp"
#include "test_support.hpp"

namespace qgt {
namespace {

constexpr double kPi = std::numbers::pi;

std::string games_file(const std::string& name) { return text::read_file(std::string(QGT_GAMES_DIR) + "/" + name); }

TEST(Numbers, DecimalsAndRationals) {
  EXPECT_EQ(text::parse_number("0.25"), 0.25);
  EXPECT_EQ(text::parse_number(" +3 "), 3.0);
  EXPECT_EQ(text::parse_number("-1e-3"), -1e-3);
  EXPECT_EQ(text::parse_number("5/48"), 5.0 / 48.0);
  EXPECT_THROW(text::parse_number("1/0"), ValidationError);
  EXPECT_THROW(text::parse_number("abc"), ValidationError);
  EXPECT_THROW(text::parse_number("1.5x"), ValidationError);
  EXPECT_THROW(text::parse_number(""), ValidationError);
  EXPECT_THROW(text::parse_number("inf"), ValidationError);
}

TEST(Numbers, FormatRoundTrips) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g(0.0, 100.0);
  for (int t = 0; t < 1000; ++t) {
    const double v = g(rng);
    EXPECT_EQ(text::parse_decimal(text::format_double(v)), v);
  }
  EXPECT_EQ(text::format_double(0.125), "0.125");
  EXPECT_EQ(text::format_double(2.0), "2");
}

TEST(Angles, PiMultiples) {
  EXPECT_DOUBLE_EQ(text::parse_angle("pi/8"), kPi / 8);
  EXPECT_DOUBLE_EQ(text::parse_angle("3pi/4"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(text::parse_angle("3*pi/4"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(text::parse_angle("-pi"), -kPi);
  EXPECT_DOUBLE_EQ(text::parse_angle("pi"), kPi);
  EXPECT_DOUBLE_EQ(text::parse_angle("0.5"), 0.5);
  EXPECT_DOUBLE_EQ(text::parse_angle("1/2"), 0.5);
  EXPECT_THROW(text::parse_angle("pi*2"), ValidationError);
  EXPECT_THROW(text::parse_angle("pi/0"), ValidationError);
  const auto list = text::parse_angle_list("0, pi/2,pi");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_DOUBLE_EQ(list[1], kPi / 2);
}

TEST(Quaternions, Literals) {
  EXPECT_EQ(text::parse_quaternion_raw("1"), Quaternion::one());
  EXPECT_EQ(text::parse_quaternion_raw("-k"), -Quaternion::k());
  EXPECT_EQ(text::parse_quaternion_raw("0.5+0.5i-0.5j+0.5k"), (Quaternion{0.5, 0.5, -0.5, 0.5}));
  EXPECT_EQ(text::parse_quaternion_raw("2j + 1"), (Quaternion{1, 0, 2, 0}));
  const auto n = text::parse_quaternion("1+i");
  EXPECT_NEAR(n.a, std::sqrt(0.5), 1e-15);
  EXPECT_THROW(text::parse_quaternion("0"), ValidationError);
  EXPECT_THROW(text::parse_quaternion_raw("1+x"), ValidationError);
  EXPECT_THROW(text::parse_quaternion_raw(""), ValidationError);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    const Quaternion q{g(rng), g(rng), g(rng), g(rng)};
    EXPECT_EQ(text::parse_quaternion_raw(q.to_string()), q);
  }
}

TEST(Quaternions, Mixtures) {
  const auto m = text::parse_quat_mixture("0.5*1 ; 0.5*i");
  ASSERT_EQ(m.support().size(), 2u);
  EXPECT_EQ(m.support()[1].first, Quaternion::i());
  EXPECT_EQ(m.support()[1].second, 0.5);
  EXPECT_EQ(text::parse_quat_mixture("j").support()[0].second, 1.0);
  EXPECT_EQ(text::parse_quat_mixture("1/4*1;1/4*i;1/4*j;1/4*k").support().size(), 4u);
  EXPECT_EQ(text::format_quat_mixture(m), "0.5*1 ; 0.5*i");
  EXPECT_THROW(text::parse_quat_mixture("0.5*1 ; 0.4*i"), ValidationError);
  EXPECT_THROW(text::parse_quat_mixture("0.5*1 ; ; 0.5*i"), ValidationError);
  EXPECT_THROW(text::parse_quat_mixture("1.5*1 ; -0.5*i"), ValidationError);
}

TEST(Complex, LiteralsAndMatrices) {
  EXPECT_EQ(text::parse_complex("1"), Complex(1, 0));
  EXPECT_EQ(text::parse_complex("-i"), Complex(0, -1));
  EXPECT_EQ(text::parse_complex("0.5-0.5i"), Complex(0.5, -0.5));
  const auto m = text::parse_matrix_token("[0,1,-i,0]");
  EXPECT_EQ(m(1, 0), Complex(0, -1));
  EXPECT_EQ(m(0, 1), Complex(1, 0));
  EXPECT_THROW(text::parse_matrix_token("[1,0,0]"), ValidationError);
  EXPECT_THROW(text::parse_matrix_token("[1,1,0,1]"), ValidationError);
  EXPECT_THROW(text::parse_matrix_token("1,0,0,1"), ValidationError);
  const auto parts = text::split_top_level("[1,0,0,1], [0,1,1,0],[1,0,0,1]");
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[1], "[0,1,1,0]");
  EXPECT_THROW(text::split_top_level("[1,0"), ValidationError);
}

TEST(GameFiles, RoundTripRandomGames) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Game g = testing::random_game(rng, 1 + t % 4, 1 + (t / 4) % 4);
    const Game back = text::parse_game(text::serialize_game(g));
    EXPECT_EQ(back.strategies1(), g.strategies1());
    EXPECT_EQ(back.strategies2(), g.strategies2());
    EXPECT_EQ(back.table(), g.table());
    EXPECT_EQ(back.name(), g.name());
  }
}

TEST(GameFiles, BundledGamesMatchBuiltins) {
  const Game ic3 = text::parse_game(games_file("ic3.game"));
  EXPECT_EQ(ic3.table(), builtin::ic3_game().table());
  EXPECT_EQ(text::parse_game(games_file("pd.game")).table(), builtin::prisoners_dilemma().table());
  const auto pg = builtin::iid1_game();
  const Game red = text::parse_game(games_file("iid1-red.game"));
  const Game green = text::parse_game(games_file("iid1-green.game"));
  EXPECT_EQ(red.at(0, 0), PayoffPair(1, 1));
  EXPECT_EQ(red.at(0, 1), PayoffPair(0, 0));
  EXPECT_EQ(green.at(0, 1), PayoffPair(1, 1));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(pg.at(0, 0, i, j), red.at(i, j));
      EXPECT_EQ(pg.at(1, 1, i, j), green.at(i, j));
    }
  }
  const Game penny = text::parse_game(games_file("penny.game"));
  EXPECT_EQ(penny.strategies1(), (LabelList{"NN", "NF", "FN", "FF"}));
}

TEST(GameFiles, Errors) {
  EXPECT_THROW(text::parse_game("rows: C D\n"), ValidationError);
  EXPECT_THROW(text::parse_game("rows: C D\ncols: C D\npayoff C C = 1 1\n"), ValidationError);
  EXPECT_THROW(text::parse_game("rows: C\ncols: C\npayoff C X = 1 1\n"), ValidationError);
  EXPECT_THROW(text::parse_game("rows: C\ncols: C\npayoff C C = 1 1\npayoff C C = 1 1\n"), ValidationError);
  EXPECT_THROW(text::parse_game("rows: C\ncols: C\npayoff C C = one 1\n"), ValidationError);
  EXPECT_THROW(text::parse_game("rows: C C\ncols: C\npayoff C C = 1 1\n"), ValidationError);
  try {
    text::parse_game("rows: C\ncols: C\n\npayoff C C 1 1\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 4:", 0), 0u) << e.what();
  }
  EXPECT_THROW(text::read_file("/nonexistent/qgt.game"), ValidationError);
}

TEST(EnvFiles, BundledIc3MatchesBuiltin) {
  const auto e = text::parse_environment(games_file("ic3.env"), {"C", "D"}, {"C", "D"});
  const auto b = builtin::ic3_environment();
  EXPECT_EQ(e.space->atoms(), b.space->atoms());
  for (std::size_t a = 0; a < e.space->size(); ++a) EXPECT_NEAR(e.space->probs()[a], b.space->probs()[a], 1e-15);
  ASSERT_EQ(e.vars1.size(), b.vars1.size());
  for (std::size_t k = 0; k < e.vars1.size(); ++k) {
    EXPECT_EQ(e.vars1[k].name, b.vars1[k].name);
    EXPECT_EQ(e.vars1[k].values, b.vars1[k].values);
  }
  EXPECT_EQ(e.vars2[0].values, b.vars2[0].values);
}

TEST(EnvFiles, RoundTrip) {
  const auto b = builtin::ic3_environment();
  const auto e = text::parse_environment(text::serialize_environment(b), {"C", "D"}, {"C", "D"});
  EXPECT_EQ(*e.space, *b.space);
  EXPECT_EQ(e.vars1[1].values, b.vars1[1].values);
}

TEST(EnvFiles, Errors) {
  const LabelList cd{"C", "D"};
  const std::string head = "var1: X\nvar2: W\n";
  EXPECT_THROW(text::parse_environment(head, cd, cd), ValidationError);
  EXPECT_THROW(text::parse_environment(head + "atom a prob 1 X=C\n", cd, cd), ValidationError);
  EXPECT_THROW(text::parse_environment(head + "atom a prob 1 X=C W=C X=D\n", cd, cd), ValidationError);
  EXPECT_THROW(text::parse_environment(head + "atom a prob 1 X=Q W=C\n", cd, cd), ValidationError);
  EXPECT_THROW(text::parse_environment(head + "atom a prob 1 X=C W=C Z=C\n", cd, cd), ValidationError);
  EXPECT_THROW(text::parse_environment(head + "atom a prob 0.5 X=C W=C\n", cd, cd), ValidationError);
  EXPECT_THROW(text::parse_environment(head + "atoms: 2\natom a prob 1 X=C W=C\n", cd, cd), ValidationError);
  EXPECT_THROW(text::parse_environment(head + "atom a prob 1/2 X=C W=C\natom a prob 1/2 X=D W=D\n", cd, cd),
               ValidationError);
  EXPECT_THROW(text::parse_environment("atom a prob 1 X=C W=C\n", cd, cd), ValidationError);
  const auto ok = text::parse_environment(head + "atom a prob 1/3 X=C W=C\natom b prob 2/3 X=D W=C\n", cd, cd);
  EXPECT_NEAR(ok.space->probs()[1], 2.0 / 3.0, 1e-15);
}

}  // namespace
}  // namespace qgt
