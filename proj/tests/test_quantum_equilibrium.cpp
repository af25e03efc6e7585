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

#include "qgt/builtin_games.hpp"
#include "qgt/circle_search.hpp"
#include "qgt/quantum_equilibrium.hpp"
#include "test_support.hpp"

namespace qgt {
namespace {

constexpr double kTol = 1e-12;
constexpr double kPi = std::numbers::pi;

const QuantumEnvironment& rot() {
  static const QuantumEnvironment qe = QuantumEnvironment::rotation_environment();
  return qe;
}

double prob(const JointDistribution& d, const Label& a, const Label& b) { return d.at({a, b}); }

TEST(CanonicalAngle, Wraps) {
  EXPECT_NEAR(canonical_angle(-kPi / 2), 3 * kPi / 2, kTol);
  EXPECT_EQ(canonical_angle(2 * kPi - 1e-12), 0.0);
  EXPECT_NEAR(canonical_angle(5 * kPi), kPi, 1e-12);
}

TEST(MaximizeOnCircle, ConstantPrefersZero) {
  const auto m = maximize_on_circle([](double) { return 1.0; });
  EXPECT_EQ(m.angle, 0.0);
  EXPECT_EQ(m.value, 1.0);
}

TEST(MaximizeOnCircle, TrigOracle) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int t = 0; t < 200; ++t) {
    const double a = coef(rng), b = coef(rng), c = coef(rng);
    const auto f = [&](double x) { return a + b * std::cos(2 * x) + c * std::sin(2 * x); };
    const auto m = maximize_on_circle(f);
    EXPECT_NEAR(m.value, a + std::hypot(b, c), 1e-12);
    EXPECT_NEAR(f(m.angle), m.value, 1e-15);
    EXPECT_GE(m.angle, 0.0);
    EXPECT_LT(m.angle, 2 * kPi);
  }
}

TEST(QgamePayoff, Ic3Values) {
  const auto g = builtin::ic3_game();
  const auto u = qgame_payoff(g, rot(), Angle{kPi / 2}, Angle{0.0});
  EXPECT_NEAR(u.first, 1.5, kTol);
  EXPECT_NEAR(u.second, 1.5, kTol);
  const auto z = qgame_payoff(g, rot(), Angle{0.7}, Angle{0.7});
  EXPECT_NEAR(z.first, 0.0, kTol);
  EXPECT_NEAR(z.second, 0.0, kTol);
  const Game zero("zero", {"C", "D"}, {"C", "D"}, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
  EXPECT_EQ(qgame_payoff(zero, rot(), Angle{1.0}, Angle{2.0}), PayoffPair(0, 0));
}

TEST(QgamePayoff, DependsOnlyOnAngleDifference) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  for (int t = 0; t < 300; ++t) {
    const Game g = testing::random_game(rng, 2, 2);
    const double th = angle(rng), ph = angle(rng), shift = angle(rng);
    const auto a = qgame_payoff(g, rot(), Angle{th}, Angle{ph});
    const auto b = qgame_payoff(g, rot(), Angle{th + shift}, Angle{ph + shift});
    EXPECT_NEAR(a.first, b.first, kTol);
    EXPECT_NEAR(a.second, b.second, kTol);
  }
}

TEST(QgamePayoff, ValidatesParameters) {
  const auto g = builtin::ic3_game();
  EXPECT_THROW(qgame_payoff(g, rot(), OperatorIndex{0}, Angle{0.0}), ValidationError);
  const Game big("big", {"a", "b", "c"}, {"x", "y"}, {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}});
  EXPECT_THROW(qgame_payoff(big, rot(), Angle{0.0}, Angle{0.0}), ValidationError);
}

TEST(BestResponseRotation, Ic3Values) {
  const auto g = builtin::ic3_game();
  const auto r = best_response_rotation(g, rot(), Angle{0.0}, Player::One);
  EXPECT_NEAR(r.angle, kPi / 2, 1e-12);
  EXPECT_NEAR(r.value, 1.5, kTol);
  const auto s = best_response_rotation(g, rot(), Angle{kPi / 4}, Player::One);
  EXPECT_NEAR(s.angle, 3 * kPi / 4, 1e-9);
  const Game ones("ones", {"C", "D"}, {"C", "D"}, {{1, 1}, {1, 1}, {1, 1}, {1, 1}});
  const auto c = best_response_rotation(ones, rot(), Angle{0.3}, Player::Two);
  EXPECT_EQ(c.angle, 0.0);
  EXPECT_NEAR(c.value, 1.0, kTol);
}

// Dense direct sampling; a degree-2 trigonometric polynomial of amplitude R
// loses at most R (2 pi / n)^2 / 2 between samples.
double sampled_max(const std::function<double(double)>& f, int n = 20000) {
  double best = -1e300;
  for (int k = 0; k < n; ++k) best = std::max(best, f(2 * kPi * k / n));
  return best;
}

StateVector random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps;
  for (int k = 0; k < 4; ++k) amps.emplace_back(gauss(rng), gauss(rng));
  return StateVector(2, 2, std::move(amps)).normalized();
}

TEST(BestResponseRotation, MatchesDirectSampling) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int t = 0; t < 40; ++t) {
    const Game g = testing::random_game(rng, 2, 2);
    const QuantumEnvironment qe =
        t % 2 == 0 ? rot() : QuantumEnvironment(random_state(rng), RotationFamily{}, RotationFamily{});
    const double opp = angle(rng);
    const auto p1 = [&](double x) { return qgame_payoff(g, qe, Angle{x}, Angle{opp}).first; };
    const auto p2 = [&](double x) { return qgame_payoff(g, qe, Angle{opp}, Angle{x}).second; };
    const auto r1 = best_response_rotation(g, qe, Angle{opp}, Player::One);
    const auto r2 = best_response_rotation(g, qe, Angle{opp}, Player::Two);
    EXPECT_NEAR(p1(r1.angle), r1.value, 1e-12);
    EXPECT_NEAR(p2(r2.angle), r2.value, 1e-12);
    const double s1 = sampled_max(p1), s2 = sampled_max(p2);
    EXPECT_GE(r1.value, s1 - 1e-12);
    EXPECT_LE(r1.value, s1 + 1e-6);
    EXPECT_GE(r2.value, s2 - 1e-12);
    EXPECT_LE(r2.value, s2 + 1e-6);
  }
}

TEST(BestResponse, FiniteFamilyEnumerates) {
  const auto g = builtin::ic3_game();
  const QuantumEnvironment qe(entangled_pair(), std::vector<UnitaryOp>{rotation(0.0), rotation(kPi / 2)},
                              RotationFamily{});
  const auto r = best_response(g, qe, Angle{0.0}, Player::One);
  EXPECT_EQ(std::get<OperatorIndex>(r.param).value, 1u);
  EXPECT_NEAR(r.value, 1.5, kTol);
  EXPECT_THROW(qe.resolve(Player::One, OperatorIndex{2}), ValidationError);
}

TEST(QuantumEquilibrium, Ic3Verdicts) {
  const auto g = builtin::ic3_game();
  const auto v = is_quantum_equilibrium(g, rot(), Angle{kPi / 2}, Angle{0.0});
  EXPECT_TRUE(v.equilibrium);
  EXPECT_NEAR(v.payoffs.first, 1.5, kTol);
  EXPECT_NEAR(v.payoffs.second, 1.5, kTol);
  const auto w = is_quantum_equilibrium(g, rot(), Angle{0.0}, Angle{0.0});
  EXPECT_FALSE(w.equilibrium);
  ASSERT_TRUE(w.witness.has_value());
  EXPECT_NEAR(w.witness->gain, 1.5, kTol);
  EXPECT_EQ(w.witness->player, Player::One);
  EXPECT_NEAR(std::get<Angle>(w.witness->param).radians, kPi / 2, 1e-12);
  const Game ones("ones", {"C", "D"}, {"C", "D"}, {{1, 1}, {1, 1}, {1, 1}, {1, 1}});
  EXPECT_TRUE(is_quantum_equilibrium(ones, rot(), Angle{0.4}, Angle{2.0}).equilibrium);
}

TEST(QuantumProfileJoint, Examples) {
  const auto g = builtin::ic3_game();
  const auto j = quantum_profile_joint(g, rot(), Angle{kPi / 2}, Angle{0.0});
  EXPECT_NEAR(prob(j, "C", "D"), 0.5, kTol);
  EXPECT_NEAR(prob(j, "D", "C"), 0.5, kTol);
  EXPECT_NEAR(prob(j, "C", "C"), 0.0, kTol);
  EXPECT_TRUE(quantum_profile_is_correlated(g, rot(), Angle{kPi / 2}, Angle{0.0}).equilibrium);
  const auto same = quantum_profile_joint(g, rot(), Angle{1.1}, Angle{1.1});
  EXPECT_NEAR(prob(same, "C", "C"), 0.5, kTol);
  EXPECT_NEAR(prob(same, "D", "D"), 0.5, kTol);
  const QuantumEnvironment product(StateVector::basis(2, 2, 0, 0), RotationFamily{}, RotationFamily{});
  const auto p = quantum_profile_joint(g, product, Angle{0.3}, Angle{1.2});
  const double a = std::pow(std::cos(0.3), 2), b = std::pow(std::cos(1.2), 2);
  EXPECT_NEAR(prob(p, "C", "C"), a * b, kTol);
  EXPECT_NEAR(prob(p, "C", "D"), a * (1 - b), kTol);
  EXPECT_NEAR(prob(p, "D", "C"), (1 - a) * b, kTol);
}

TEST(QuantumEquilibrium, Ic3AcceptedProfilesAreCorrelated) {
  const Game g = builtin::ic3_game();
  std::size_t accepted = 0;
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j < 32; ++j) {
      const Angle th{kPi * i / 16}, ph{kPi * j / 16};
      if (!is_quantum_equilibrium(g, rot(), th, ph).equilibrium) continue;
      ++accepted;
      EXPECT_TRUE(quantum_profile_is_correlated(g, rot(), th, ph).equilibrium) << i << " " << j;
    }
  }
  EXPECT_GT(accepted, 0u);
}

TEST(QuantumEquilibrium, ClosedAcceptedProfilesAreCorrelated) {
  std::mt19937_64 rng(13);
  std::size_t accepted = 0;
  for (int t = 0; t < 16; ++t) {
    const Game g = t == 0 ? builtin::prisoners_dilemma() : testing::random_integer_game(rng, 2, 2);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        const Angle th{kPi * i / 4}, ph{kPi * j / 4};
        const auto closed = is_closed_quantum_equilibrium(g, rot(), th, ph);
        const auto plain = is_quantum_equilibrium(g, rot(), th, ph);
        EXPECT_GE(std::max(closed.gain1, closed.gain2) + 1e-12, std::max(plain.best1.gain, plain.best2.gain));
        if (!closed.equilibrium) continue;
        ++accepted;
        EXPECT_TRUE(plain.equilibrium);
        EXPECT_TRUE(quantum_profile_is_correlated(g, rot(), th, ph).equilibrium);
      }
    }
  }
  EXPECT_GT(accepted, 0u);
}

TEST(QuantumEquilibrium, RotationEquilibriumNeedNotBeCorrelated) {
  const Game pd = builtin::prisoners_dilemma();
  const Angle th{kPi / 2}, ph{0.0};
  const auto plain = is_quantum_equilibrium(pd, rot(), th, ph);
  EXPECT_TRUE(plain.equilibrium);
  EXPECT_NEAR(plain.payoffs.first, 2.5, 1e-12);
  const auto corr = quantum_profile_is_correlated(pd, rot(), th, ph);
  EXPECT_FALSE(corr.equilibrium);
  const auto closed = is_closed_quantum_equilibrium(pd, rot(), th, ph);
  EXPECT_FALSE(closed.equilibrium);
  ASSERT_TRUE(closed.witness.has_value());
  EXPECT_EQ(closed.witness->name, "const(D)");
  EXPECT_NEAR(closed.witness->gain, 0.5, 1e-12);
}

TEST(QuantumEquilibrium, ClosedCheckOnOperatorLists) {
  const Game g = builtin::ic3_game();
  const QuantumEnvironment qe(entangled_pair(), std::vector<UnitaryOp>{rotation(0.0), rotation(kPi / 2)},
                              std::vector<UnitaryOp>{rotation(0.0)});
  const auto v = is_closed_quantum_equilibrium(g, qe, OperatorIndex{1}, OperatorIndex{0});
  EXPECT_TRUE(v.equilibrium);
  EXPECT_NEAR(v.payoffs.first, 1.5, 1e-12);
  EXPECT_EQ(v.deviations.size(), 2u * 4u + 4u);
}

TEST(PrivateQuantum, Iid1ClosedForms) {
  const auto pg = builtin::iid1_game();
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  std::vector<double> tr(32), tg(32), pr(32), pgr(32);
  for (auto* v : {&tr, &tg, &pr, &pgr}) {
    for (auto& x : *v) x = angle(rng);
  }
  const auto sq = [](double x) { return x * x; };
  double worst = 0.0;
  for (double a : tr) {
    for (double b : tg) {
      for (double c : pr) {
        for (double d : pgr) {
          const auto u = private_quantum_payoff(pg, rot(), InfoStrategy::angles({a, b}), InfoStrategy::angles({c, d}));
          const double expected =
              0.25 * (sq(std::cos(a - c)) + sq(std::sin(a - d)) + sq(std::sin(b - c)) + sq(std::sin(b - d)));
          worst = std::max({worst, std::abs(u.first - expected), std::abs(u.second - expected)});
        }
      }
    }
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(PrivateQuantum, TypeAProfile) {
  const auto pg = builtin::iid1_game();
  const auto f = InfoStrategy::angles({0.0, kPi / 2});
  const auto v = is_private_quantum_equilibrium(pg, rot(), f, f);
  EXPECT_NEAR(v.payoffs.first, 0.75, kTol);
  EXPECT_NEAR(v.payoffs.second, 0.75, kTol);
  EXPECT_TRUE(v.equilibrium);
}

TEST(PrivateQuantum, TypeBProfile) {
  const auto pg = builtin::iid1_game();
  const auto v = is_private_quantum_equilibrium(pg, rot(), InfoStrategy::angles({kPi / 8, 3 * kPi / 8}),
                                                InfoStrategy::angles({0.0, 3 * kPi / 4}));
  const double expected = 0.5 + std::sqrt(2.0) / 4;
  EXPECT_NEAR(v.payoffs.first, expected, 1e-12);
  EXPECT_NEAR(v.payoffs.second, expected, 1e-12);
  EXPECT_TRUE(v.equilibrium);
  for (const auto& r : v.responses1) EXPECT_LE(r.gain, 1e-9);
  for (const auto& r : v.responses2) EXPECT_LE(r.gain, 1e-9);
  EXPECT_GT(v.payoffs.first, classical_value_bound(pg).value);
}

TEST(PrivateQuantum, AlignedProfileRejected) {
  const auto pg = builtin::iid1_game();
  const auto f = InfoStrategy::angles({0.0, 0.0});
  const auto v = is_private_quantum_equilibrium(pg, rot(), f, f);
  EXPECT_FALSE(v.equilibrium);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_GT(v.witness->second.gain, 0.1);
  EXPECT_EQ(v.witness->second.type, "green");
}

TEST(PrivateQuantum, ZeroTables) {
  const Game zero("zero", {"C", "D"}, {"C", "D"}, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
  const auto pg = PrivateInfoGame::from_cell_games("z", {"a", "b"}, {"a", "b"}, {0.25, 0.25, 0.25, 0.25},
                                                   {zero, zero, zero, zero});
  const auto u = private_quantum_payoff(pg, rot(), InfoStrategy::angles({0.1, 0.2}), InfoStrategy::angles({0.3, 0.4}));
  EXPECT_EQ(u, PayoffPair(0, 0));
  EXPECT_THROW(private_quantum_payoff(pg, rot(), InfoStrategy::angles({0.1}), InfoStrategy::angles({0.3, 0.4})),
               ValidationError);
}

TEST(Search, Ic3FindsVerifiedEquilibria) {
  const auto rep = search_quantum_equilibria(builtin::ic3_game(), rot(), 16, 5);
  ASSERT_FALSE(rep.classes.empty());
  for (const auto& c : rep.classes) {
    EXPECT_TRUE(is_quantum_equilibrium(builtin::ic3_game(), rot(), Angle{c.theta}, Angle{c.phi}).equilibrium);
  }
}

}  // namespace
}  // namespace qgt
