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
#include <map>
#include <numbers>
#include <random>

#include "qgt/penny_flip.hpp"
#include "qgt/support_enumeration.hpp"

namespace qgt {
namespace {

constexpr double kTol = 1e-12;

UnitaryOp random_unitary2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  const double t = angle(rng), a = angle(rng), b = angle(rng), g = angle(rng);
  const Complex e = std::polar(1.0, g);
  return UnitaryOp(2, {e * std::polar(std::cos(t), a), e * std::polar(std::sin(t), b),
                       -e * std::polar(std::sin(t), -b), e * std::polar(std::cos(t), -a)});
}

TEST(PennyGame, Table) {
  const auto g = penny_game();
  EXPECT_EQ(payoff(g, {"NN", "N"}), PayoffPair(1, 0));
  EXPECT_EQ(payoff(g, {"NF", "N"}), PayoffPair(0, 1));
  EXPECT_EQ(payoff(g, {"FF", "F"}), PayoffPair(0, 1));
  EXPECT_TRUE(pure_nash(g).empty());
  for (const auto& e : mixed_nash_small(g)) {
    EXPECT_NEAR(e.value.first, 0.5, kTol);
    EXPECT_NEAR(e.value.second, 0.5, kTol);
  }
}

TEST(Sequential, ClassicalMovesMatchTable) {
  const auto g = penny_game();
  const std::array<UnitaryOp, 2> ops{penny_no_flip(), penny_flip()};
  const std::array<const char*, 2> name{"N", "F"};
  for (int m = 0; m < 8; ++m) {
    const int a = m & 1, b = (m >> 1) & 1, c = (m >> 2) & 1;
    const auto out = run_sequential({ops[a], ops[b], ops[c]});
    const auto expected = payoff(g, {std::string(name[a]) + name[c], name[b]});
    EXPECT_NEAR(out.payoffs.first, expected.first, kTol);
    EXPECT_NEAR(out.payoffs.second, expected.second, kTol);
  }
}

TEST(Sequential, Examples) {
  const auto nnn = run_sequential({penny_no_flip(), penny_no_flip(), penny_no_flip()});
  EXPECT_NEAR(nnn.prob_heads, 1.0, kTol);
  const auto nfn = run_sequential({penny_no_flip(), penny_flip(), penny_no_flip()});
  EXPECT_NEAR(std::abs(nfn.final_state[1] - Complex(0, -1)), 0.0, kTol);
  EXPECT_NEAR(nfn.payoffs.second, 1.0, kTol);
  const auto u = meyer_u();
  const auto cheat = run_sequential({u, penny_flip(), u.adjoint()});
  EXPECT_NEAR(cheat.payoffs.first, 1.0, kTol);
  EXPECT_NEAR(cheat.payoffs.second, 0.0, kTol);
}

TEST(Sequential, SamplingFollowsProbability) {
  std::mt19937_64 rng(4);
  const auto out = run_sequential({meyer_u(), penny_no_flip(), penny_no_flip()});
  int heads = 0;
  for (int t = 0; t < 20000; ++t) heads += sample_heads(out, rng);
  EXPECT_NEAR(heads / 20000.0, out.prob_heads, 0.02);
}

TEST(Meyer, CheatCheck) {
  const auto m = meyer_cheat_check();
  EXPECT_LE(m.unitarity_residual, kTol);
  EXPECT_LE(m.offdiag_flip, kTol);
  EXPECT_LE(m.offdiag_no_flip, kTol);
  EXPECT_NEAR(m.win_vs_flip, 1.0, kTol);
  EXPECT_NEAR(m.win_vs_no_flip, 1.0, kTol);
  EXPECT_EQ(m.mixtures.size(), 11u);
  EXPECT_TRUE(m.passed);
}

TEST(Sequential, RejectsBadScripts) {
  EXPECT_THROW(
      (ProtocolScript{ProtocolKind::Sequential,
                      {{Player::One, penny_flip()}, {Player::One, penny_flip()}, {Player::Two, penny_flip()}}}
           .validate()),
      ValidationError);
  EXPECT_THROW(run_simple({penny_flip(), penny_flip()}, UnitaryOp::identity(4)), ValidationError);
}

TEST(Simple, Examples) {
  const auto nn = run_simple({penny_no_flip(), penny_no_flip()}, penny_no_flip());
  EXPECT_NEAR(nn.at({"NN", "N"}), 1.0, kTol);
  const auto fn = run_simple({penny_flip(), penny_no_flip()}, penny_flip());
  EXPECT_NEAR(fn.at({"FN", "F"}), 1.0, kTol);
}

double product_distance(const JointDistribution& d) {
  std::map<Label, double> r, c;
  for (const auto& [p, w] : d) {
    r[p.s1] += w;
    c[p.s2] += w;
  }
  double tv = 0.0;
  for (const auto& [p, w] : d) tv += std::abs(w - r[p.s1] * c[p.s2]);
  return tv / 2;
}

TEST(Simple, ArbitraryUnitariesGiveProductDistributions) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const auto d = run_simple({random_unitary2(rng), random_unitary2(rng)}, random_unitary2(rng));
    EXPECT_LE(product_distance(d), kTol);
    double total = 0.0;
    for (const auto& [p, w] : d) total += w;
    EXPECT_NEAR(total, 1.0, kTol);
  }
}

TEST(Simple, EntangledFirstPlayerStillProduct) {
  // Player 1's pennies end in (NN + FF) / sqrt 2.
  const double h = std::sqrt(0.5);
  const UnitaryOp bell(4, {h, 0, h, 0, 0, h, 0, h, 0, h, 0, -h, h, 0, -h, 0});
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto d = run_simple(bell, random_unitary2(rng));
    EXPECT_LE(product_distance(d), kTol);
    double nf = 0.0, nn = 0.0;
    for (const auto& [p, w] : d) {
      if (p.s1 == "NF") nf += w;
      if (p.s1 == "NN") nn += w;
    }
    EXPECT_NEAR(nf, 0.0, kTol);
    EXPECT_NEAR(nn, 0.5, kTol);
  }
}

}  // namespace
}  // namespace qgt
