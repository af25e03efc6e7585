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

// Command-line front end: equilibrium checks, protocol traces and
// calibration reports. Every subcommand accepts --json.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgt/builtin_games.hpp"
#include "qgt/environment.hpp"
#include "qgt/error.hpp"
#include "qgt/ewl.hpp"
#include "qgt/game.hpp"
#include "qgt/penny_flip.hpp"
#include "qgt/private_info.hpp"
#include "qgt/quantum_equilibrium.hpp"
#include "qgt/quantum_state.hpp"
#include "qgt/support_enumeration.hpp"
#include "qgt/text_format.hpp"

namespace {

using nlohmann::json;
using qgt::text::format_double;

constexpr std::uint64_t kDefaultSeed = 1;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("QGT_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw qgt::ValidationError(std::string("QGT_SEED is not an unsigned integer: ") + s);
    }
  }
  return kDefaultSeed;
}

int player_number(qgt::Player p) { return static_cast<int>(p); }

std::string fmt(double v) { return format_double(v); }

std::string fmt_pair(const qgt::PayoffPair& p) { return "(" + fmt(p.first) + ", " + fmt(p.second) + ")"; }

json pair_json(const qgt::PayoffPair& p) { return json::array({p.first, p.second}); }

json joint_json(const qgt::JointDistribution& d) {
  json out = json::array();
  for (const auto& [profile, p] : d) out.push_back({{"row", profile.s1}, {"col", profile.s2}, {"prob", p}});
  return out;
}

std::string joint_text(const qgt::JointDistribution& d) {
  std::string out;
  for (const auto& [profile, p] : d) {
    out += "  (" + profile.s1 + "," + profile.s2 + "): " + fmt(p) + "\n";
  }
  return out;
}

json mixed_json(const qgt::MixedStrategy& m) {
  json out = json::object();
  for (const auto& [label, w] : m.weights) out[label] = w;
  return out;
}

std::string mixed_text(const qgt::MixedStrategy& m) {
  std::string out;
  for (const auto& [label, w] : m.weights) out += (out.empty() ? "" : " ") + label + ":" + fmt(w);
  return "{" + out + "}";
}

qgt::Game load_game(const std::string& spec) {
  if (spec == "builtin:ic3") return qgt::builtin::ic3_game();
  if (spec == "builtin:pd") return qgt::builtin::prisoners_dilemma();
  if (spec == "builtin:penny") return qgt::penny_game();
  if (spec.rfind("builtin:", 0) == 0) throw qgt::ValidationError("unknown built-in game '" + spec + "'");
  return qgt::text::parse_game(qgt::text::read_file(spec));
}

qgt::Environment load_environment(const std::string& spec, const qgt::Game& g) {
  if (spec == "builtin:ic3") return qgt::builtin::ic3_environment();
  if (spec.rfind("builtin:", 0) == 0) throw qgt::ValidationError("unknown built-in environment '" + spec + "'");
  return qgt::text::parse_environment(qgt::text::read_file(spec), g.strategies1(), g.strategies2());
}

/// Output of a subcommand: a human-readable table and the same numbers as
/// one JSON object.
struct Report {
  std::ostringstream text;
  json data = json::object();
};

json deviations_json(const std::vector<qgt::EnvDeviation>& devs) {
  json out = json::array();
  for (const auto& d : devs) {
    out.push_back({{"player", player_number(d.player)}, {"variable", d.name}, {"payoff", d.payoff}, {"gain", d.gain}});
  }
  return out;
}

void env_verdict(Report& r, const qgt::EnvVerdict& v, const std::string& kind) {
  r.text << kind << ": " << (v.equilibrium ? "equilibrium" : "NOT equilibrium");
  if (v.witness) r.text << "; deviation " << v.witness->name << " gains " << fmt(v.witness->gain);
  r.text << "\npayoffs: " << fmt_pair(v.payoffs) << "\n";
  r.text << "max gain: P1 " << fmt(v.gain1) << ", P2 " << fmt(v.gain2) << "\n";
  r.text << "deviations:\n";
  for (const auto& d : v.deviations) {
    r.text << "  P" << player_number(d.player) << " " << d.name << " payoff " << fmt(d.payoff) << " gain "
           << fmt(d.gain) << "\n";
  }
  r.data["equilibrium"] = v.equilibrium;
  r.data["payoffs"] = pair_json(v.payoffs);
  r.data["gain1"] = v.gain1;
  r.data["gain2"] = v.gain2;
  r.data["deviations"] = deviations_json(v.deviations);
  if (v.witness) {
    r.data["witness"] = {{"player", player_number(v.witness->player)},
                         {"variable", v.witness->name},
                         {"payoff", v.witness->payoff},
                         {"gain", v.witness->gain}};
  } else {
    r.data["witness"] = nullptr;
  }
}

// ---------------------------------------------------------------------------

void cmd_nash(Report& r, const std::string& game_path, bool mixed) {
  const auto g = load_game(game_path);
  const auto pure = qgt::pure_nash(g);
  r.data["game"] = g.name();
  r.data["pure"] = json::array();
  r.text << "game: " << g.name() << "\npure equilibria:";
  if (pure.empty()) r.text << " none";
  r.text << "\n";
  for (const auto& p : pure) {
    const auto u = qgt::payoff(g, p);
    r.text << "  (" << p.s1 << "," << p.s2 << ") payoffs " << fmt_pair(u) << "\n";
    r.data["pure"].push_back({{"row", p.s1}, {"col", p.s2}, {"payoffs", pair_json(u)}});
  }
  if (mixed) {
    const auto eqs = qgt::mixed_nash_small(g);
    r.data["mixed"] = json::array();
    r.text << "mixed equilibria:\n";
    for (const auto& e : eqs) {
      r.text << "  P1 " << mixed_text(e.row) << " P2 " << mixed_text(e.col) << " value " << fmt_pair(e.value)
             << "\n";
      r.data["mixed"].push_back({{"p1", mixed_json(e.row)}, {"p2", mixed_json(e.col)}, {"value", pair_json(e.value)}});
    }
  }
}

void cmd_correlated(Report& r, const std::string& game_path, const std::string& env_path, const std::string& x,
                    const std::string& y, bool closed_env) {
  const auto g = load_game(game_path);
  const auto e = load_environment(env_path, g);
  const auto& xv = e.find(qgt::Player::One, x);
  const auto& yv = e.find(qgt::Player::Two, y);
  const auto joint = qgt::joint_distribution(xv, yv);
  r.data["profile"] = {x, y};
  r.data["joint"] = joint_json(joint);
  r.text << "profile: (" << x << ", " << y << ")\njoint:\n" << joint_text(joint);
  if (closed_env) {
    env_verdict(r, qgt::is_env_nash(g, e, xv, yv), "G(E)");
  } else {
    env_verdict(r, qgt::is_correlated_equilibrium(g, xv, yv), "correlated");
  }
}

void cmd_commute(Report& r, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::size_t failures = 0, profiles = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto inst = qgt::random_private_instance(rng);
    const auto rep = qgt::check_commute(inst.game, inst.env);
    worst = std::max(worst, rep.max_abs_diff);
    profiles += rep.profiles;
    if (!rep.holds) ++failures;
  }
  r.text << "trials: " << trials << " seed: " << seed << "\nprofiles compared: " << profiles
         << "\nmax |difference|: " << fmt(worst) << "\nfailures: " << failures << "\n"
         << (failures == 0 ? "commutes: yes" : "commutes: NO") << "\n";
  r.data = {{"trials", trials},   {"seed", seed},         {"profiles", profiles},
            {"max_abs_diff", worst}, {"failures", failures}, {"holds", failures == 0}};
}

std::string param_text(const qgt::StrategyParam& p) {
  return fmt(std::get<qgt::Angle>(p).radians);
}

void cmd_quantum_eq(Report& r, const std::string& game_path, const std::string& theta, const std::string& phi,
                    bool search, std::size_t starts, std::uint64_t seed) {
  const auto g = load_game(game_path);
  const auto qe = qgt::QuantumEnvironment::rotation_environment();
  if (search) {
    const auto rep = qgt::search_quantum_equilibria(g, qe, starts, seed);
    r.text << "starts: " << rep.starts << " seed: " << rep.seed << " unconverged: " << rep.unconverged << "\n";
    r.data = {{"starts", rep.starts}, {"seed", rep.seed}, {"unconverged", rep.unconverged}, {"classes", json::array()}};
    for (const auto& c : rep.classes) {
      r.text << "class: theta " << fmt(c.theta) << " phi " << fmt(c.phi) << " payoffs " << fmt_pair(c.payoffs)
             << " hits " << c.hits << "\n"
             << joint_text(c.joint);
      r.data["classes"].push_back({{"theta", c.theta},
                                   {"phi", c.phi},
                                   {"payoffs", pair_json(c.payoffs)},
                                   {"hits", c.hits},
                                   {"joint", joint_json(c.joint)}});
    }
    return;
  }
  if (theta.empty() || phi.empty()) throw qgt::ValidationError("quantum-eq needs --theta and --phi, or --search");
  const qgt::Angle t{qgt::text::parse_angle(theta)}, f{qgt::text::parse_angle(phi)};
  const auto v = qgt::is_quantum_equilibrium(g, qe, t, f);
  const auto joint = qgt::quantum_profile_joint(g, qe, t, f);
  const auto corr = qgt::quantum_profile_is_correlated(g, qe, t, f);
  const auto closed = qgt::is_closed_quantum_equilibrium(g, qe, t, f);
  r.text << "theta: " << fmt(t.radians) << " phi: " << fmt(f.radians) << "\njoint:\n" << joint_text(joint)
         << "payoffs: " << fmt_pair(v.payoffs) << "\n"
         << "best response P1: angle " << param_text(v.best1.param) << " payoff " << fmt(v.best1.payoff) << " gain "
         << fmt(v.best1.gain) << "\n"
         << "best response P2: angle " << param_text(v.best2.param) << " payoff " << fmt(v.best2.payoff) << " gain "
         << fmt(v.best2.gain) << "\n"
         << "equilibrium: " << (v.equilibrium ? "yes" : "no") << "\n"
         << "correlated equilibrium: " << (corr.equilibrium ? "yes" : "no") << "\n"
         << "equilibrium with relabelings: " << (closed.equilibrium ? "yes" : "no");
  if (closed.witness) r.text << "; " << closed.witness->name << " gains " << fmt(closed.witness->gain);
  r.text << "\n";
  json closed_json = {{"equilibrium", closed.equilibrium}};
  if (closed.witness) closed_json["witness"] = {{"name", closed.witness->name}, {"gain", closed.witness->gain}};
  r.data = {{"theta", t.radians},
            {"phi", f.radians},
            {"joint", joint_json(joint)},
            {"payoffs", pair_json(v.payoffs)},
            {"best1", {{"angle", std::get<qgt::Angle>(v.best1.param).radians},
                       {"payoff", v.best1.payoff},
                       {"gain", v.best1.gain}}},
            {"best2", {{"angle", std::get<qgt::Angle>(v.best2.param).radians},
                       {"payoff", v.best2.payoff},
                       {"gain", v.best2.gain}}},
            {"equilibrium", v.equilibrium},
            {"correlated", corr.equilibrium},
            {"closed", closed_json}};
}

json type_responses_json(const std::vector<qgt::TypeResponse>& rs) {
  json out = json::array();
  for (const auto& t : rs) {
    out.push_back({{"type", t.type},
                   {"current", t.current},
                   {"best_angle", t.best_angle},
                   {"best_value", t.best_value},
                   {"gain", t.gain}});
  }
  return out;
}

void cmd_private_quantum(Report& r, const std::string& builtin, const std::string& profile, bool bound,
                         bool search, std::size_t starts, std::uint64_t seed) {
  if (builtin != "iid1") throw qgt::ValidationError("unknown built-in private-information game '" + builtin + "'");
  const auto pg = qgt::builtin::iid1_game();
  const auto qe = qgt::QuantumEnvironment::rotation_environment();
  r.data["game"] = pg.name();
  r.text << "game: " << pg.name() << "\n";
  if (!profile.empty()) {
    std::vector<double> a;
    if (profile == "a") {
      a = {0.0, std::numbers::pi / 2, 0.0, std::numbers::pi / 2};
    } else if (profile == "b") {
      a = {std::numbers::pi / 8, 3 * std::numbers::pi / 8, 0.0, 3 * std::numbers::pi / 4};
    } else {
      a = qgt::text::parse_angle_list(profile);
      if (a.size() != 4) throw qgt::ValidationError("--profile needs theta_red,theta_green,phi_red,phi_green");
    }
    const auto f1 = qgt::InfoStrategy::angles({a[0], a[1]});
    const auto f2 = qgt::InfoStrategy::angles({a[2], a[3]});
    const auto v = qgt::is_private_quantum_equilibrium(pg, qe, f1, f2);
    r.text << "theta (red, green): " << fmt(a[0]) << ", " << fmt(a[1]) << "\nphi (red, green): " << fmt(a[2]) << ", "
           << fmt(a[3]) << "\npayoffs: " << fmt_pair(v.payoffs) << "\n";
    for (const auto& [who, list] : {std::pair{1, &v.responses1}, std::pair{2, &v.responses2}}) {
      for (const auto& t : *list) {
        r.text << "  P" << who << " " << t.type << ": current " << fmt(t.current) << " best " << fmt(t.best_value)
               << " at " << fmt(t.best_angle) << " gain " << fmt(t.gain) << "\n";
      }
    }
    r.text << "equilibrium: " << (v.equilibrium ? "yes" : "no") << "\n";
    r.data["profile"] = {{"theta", {a[0], a[1]}}, {"phi", {a[2], a[3]}}};
    r.data["payoffs"] = pair_json(v.payoffs);
    r.data["responses1"] = type_responses_json(v.responses1);
    r.data["responses2"] = type_responses_json(v.responses2);
    r.data["gain1"] = v.gain1;
    r.data["gain2"] = v.gain2;
    r.data["equilibrium"] = v.equilibrium;
  }
  if (bound) {
    const auto b = qgt::classical_value_bound(pg);
    r.text << "classical bound: " << fmt(b.value) << " at (" << b.argmax.s1 << ", " << b.argmax.s2 << ")\n";
    r.data["classical_bound"] = {{"value", b.value}, {"row", b.argmax.s1}, {"col", b.argmax.s2}};
  }
  if (search) {
    const auto rep = qgt::search_private_quantum_equilibria(pg, qe, starts, seed);
    r.text << "search: starts " << rep.starts << " seed " << rep.seed << " unconverged " << rep.unconverged << "\n";
    json classes = json::array();
    for (const auto& c : rep.classes) {
      r.text << "  class: theta " << fmt(c.theta[0]) << "," << fmt(c.theta[1]) << " phi " << fmt(c.phi[0]) << ","
             << fmt(c.phi[1]) << " payoffs " << fmt_pair(c.payoffs) << " hits " << c.hits << "\n";
      classes.push_back({{"theta", c.theta}, {"phi", c.phi}, {"payoffs", pair_json(c.payoffs)}, {"hits", c.hits}});
    }
    r.data["search"] = {{"starts", rep.starts}, {"seed", rep.seed}, {"unconverged", rep.unconverged}, {"classes", classes}};
  }
  if (profile.empty() && !bound && !search) {
    throw qgt::ValidationError("private-quantum needs --profile, --classical-bound or --search");
  }
}

void cmd_bell(Report& r, const std::string& angles) {
  const auto a = qgt::text::parse_angle_list(angles);
  if (a.size() != 4) throw qgt::ValidationError("--angles needs four values");
  const auto b = qgt::bell_chain_demo(a[0], a[1], a[2], a[3]);
  r.text << "angles: " << fmt(a[0]) << ", " << fmt(a[1]) << ", " << fmt(a[2]) << ", " << fmt(a[3])
         << "\nP(x != w): " << fmt(b.lhs) << "\nP(x != y) + P(y != z) + P(z != w): " << fmt(b.rhs)
         << "\nclassical chain bound violated: " << (b.violated ? "yes" : "no") << "\n";
  r.data = {{"angles", a}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"violated", b.violated}};
}

qgt::UnitaryOp move_token(const std::string& t) {
  if (t == "N") return qgt::penny_no_flip();
  if (t == "F") return qgt::penny_flip();
  if (t == "U") return qgt::meyer_u();
  if (t == "Uinv") return qgt::meyer_u().adjoint();
  if (!t.empty() && t.front() == '[') return qgt::text::parse_matrix_token(t);
  throw qgt::ValidationError("unknown move '" + t + "' (expected N, F, U, Uinv or [a,b,c,d])");
}

json complex_json(const qgt::Complex& z) { return json::array({z.real(), z.imag()}); }

void cmd_pennyflip(Report& r, const std::string& moves, bool meyer) {
  if (meyer) {
    const auto m = qgt::meyer_cheat_check();
    r.text << "unitarity residual of U: " << fmt(m.unitarity_residual)
           << "\noff-diagonal of U^-1 F U: " << fmt(m.offdiag_flip)
           << "\noff-diagonal of U^-1 N U: " << fmt(m.offdiag_no_flip) << "\nwin vs F: " << fmt(m.win_vs_flip)
           << "\nwin vs N: " << fmt(m.win_vs_no_flip) << "\n";
    json mixtures = json::array();
    for (const auto& [p, w] : m.mixtures) {
      r.text << "  P2 flips with " << fmt(p) << ": win " << fmt(w) << "\n";
      mixtures.push_back({{"flip_prob", p}, {"win", w}});
    }
    r.text << "max residual: " << fmt(m.max_residual) << "\npassed: " << (m.passed ? "yes" : "no") << "\n";
    r.data = {{"unitarity_residual", m.unitarity_residual},
              {"offdiag_flip", m.offdiag_flip},
              {"offdiag_no_flip", m.offdiag_no_flip},
              {"win_vs_flip", m.win_vs_flip},
              {"win_vs_no_flip", m.win_vs_no_flip},
              {"mixtures", mixtures},
              {"max_residual", m.max_residual},
              {"passed", m.passed}};
    return;
  }
  if (moves.empty()) throw qgt::ValidationError("pennyflip needs --moves or --check-meyer");
  const auto tokens = qgt::text::split_top_level(moves);
  if (tokens.size() != 3) throw qgt::ValidationError("--moves needs three moves (P1, P2, P1)");
  const auto out = qgt::run_sequential({move_token(tokens[0]), move_token(tokens[1]), move_token(tokens[2])});
  r.text << "moves: " << tokens[0] << ", " << tokens[1] << ", " << tokens[2] << "\nfinal state: H "
         << fmt(out.final_state[0].real()) << (out.final_state[0].imag() < 0 ? "" : "+")
         << fmt(out.final_state[0].imag()) << "i, T " << fmt(out.final_state[1].real())
         << (out.final_state[1].imag() < 0 ? "" : "+") << fmt(out.final_state[1].imag()) << "i\nP(H): "
         << fmt(out.prob_heads) << "\nP(T): " << fmt(out.prob_tails) << "\npayoffs: " << fmt_pair(out.payoffs)
         << "\n";
  r.data = {{"moves", tokens},
            {"final_state", {complex_json(out.final_state[0]), complex_json(out.final_state[1])}},
            {"prob_heads", out.prob_heads},
            {"prob_tails", out.prob_tails},
            {"payoffs", pair_json(out.payoffs)}};
}

qgt::OutcomeAssignment assignment(const std::string& name) {
  if (name == "default") return qgt::OutcomeAssignment::default_assignment();
  if (name == "paper") return qgt::OutcomeAssignment::paper_assignment();
  throw qgt::ValidationError("--assignment must be default or paper");
}

json cells_json(const qgt::CellDistribution& d) {
  return {{"CC", d[0]}, {"CD", d[1]}, {"DC", d[2]}, {"DD", d[3]}};
}

json mixture_json(const qgt::MixedQuatStrategy& m) {
  json out = json::array();
  for (const auto& [q, w] : m.support()) out.push_back({{"weight", w}, {"quaternion", {q.a, q.b, q.c, q.d}}});
  return out;
}

std::string cells_text(const qgt::CellDistribution& d) {
  return "  CC " + fmt(d[0]) + "\n  CD " + fmt(d[1]) + "\n  DC " + fmt(d[2]) + "\n  DD " + fmt(d[3]) + "\n";
}

void cmd_ewl(Report& r, const std::string& game_path, const std::string& p1, const std::string& p2,
             const std::string& asg_name, bool calibrate, bool search, std::size_t starts, std::uint64_t seed) {
  const auto asg = assignment(asg_name);
  r.data["assignment"] = asg.describe();
  r.text << "assignment: " << asg.describe() << "\n";
  if (calibrate) {
    const auto c = qgt::calibrate(asg, 1000, seed);
    r.text << "identification: " << (c.feasible ? "found" : "infeasible") << "\n";
    r.data["feasible"] = c.feasible;
    if (c.feasible) {
      r.text << "frame quaternion: " << c.frame.to_string() << "\nsigns: " << c.signs[0] << " " << c.signs[1] << " "
             << c.signs[2] << "\ntrials: " << c.trials << " seed: " << c.seed
             << "\nmax total variation: " << fmt(c.max_tv_error) << "\n";
      r.data["frame"] = {c.frame.a, c.frame.b, c.frame.c, c.frame.d};
      r.data["signs"] = c.signs;
      r.data["trials"] = c.trials;
      r.data["seed"] = c.seed;
      r.data["max_tv_error"] = c.max_tv_error;
    }
    return;
  }
  if (game_path.empty()) throw qgt::ValidationError("ewl needs a game file unless --calibrate is given");
  const auto g = load_game(game_path);
  if (search) {
    const auto rep = qgt::search_quat_equilibria(g, asg, starts, seed);
    r.text << "starts: " << rep.starts << " seed: " << rep.seed << " unmatched: " << rep.unmatched << "\n";
    json classes = json::array();
    for (const auto& c : rep.classes) {
      r.text << "class: payoffs " << fmt_pair(c.payoffs) << " hits " << c.hits << "\n"
             << "  p1 " << qgt::text::format_quat_mixture(c.s1) << "\n  p2 " << qgt::text::format_quat_mixture(c.s2)
             << "\n"
             << cells_text(c.outcome);
      classes.push_back({{"payoffs", pair_json(c.payoffs)},
                         {"hits", c.hits},
                         {"p1", mixture_json(c.s1)},
                         {"p2", mixture_json(c.s2)},
                         {"outcome", cells_json(c.outcome)}});
    }
    r.data["starts"] = rep.starts;
    r.data["seed"] = rep.seed;
    r.data["unmatched"] = rep.unmatched;
    r.data["classes"] = classes;
    return;
  }
  if (p1.empty() || p2.empty()) throw qgt::ValidationError("ewl needs --p1 and --p2, --search, or --calibrate");
  const auto s1 = qgt::text::parse_quat_mixture(p1);
  const auto s2 = qgt::text::parse_quat_mixture(p2);
  const auto v = qgt::is_quat_equilibrium(g, s1, s2, asg);
  const auto outcome = qgt::outcome_distribution(s1, s2, asg);
  r.text << "p1: " << qgt::text::format_quat_mixture(s1) << "\np2: " << qgt::text::format_quat_mixture(s2)
         << "\noutcomes:\n"
         << cells_text(outcome) << "payoffs: " << fmt_pair(v.payoffs) << "\nbest pure reply: P1 " << fmt(v.lambda1)
         << ", P2 " << fmt(v.lambda2) << "\nequilibrium: " << (v.equilibrium ? "yes" : "no") << "\n";
  r.data["p1"] = mixture_json(s1);
  r.data["p2"] = mixture_json(s2);
  r.data["outcome"] = cells_json(outcome);
  r.data["payoffs"] = pair_json(v.payoffs);
  r.data["lambda1"] = v.lambda1;
  r.data["lambda2"] = v.lambda2;
  r.data["equilibrium"] = v.equilibrium;
  if (v.witness) {
    const auto& w = *v.witness;
    r.text << "witness: P" << player_number(w.player) << " " << w.deviation.to_string() << " payoff " << fmt(w.payoff)
           << " gain " << fmt(w.gain) << "\n";
    r.data["witness"] = {{"player", player_number(w.player)},
                         {"deviation", {w.deviation.a, w.deviation.b, w.deviation.c, w.deviation.d}},
                         {"payoff", w.payoff},
                         {"gain", w.gain}};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical, quantum and quaternion game equilibria"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON object instead of a table");

  std::function<void(Report&)> run;
  std::uint64_t seed = 0;
  bool seed_given = false;
  const auto seed_option = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& s) { seed = s, seed_given = true; }, "Random seed (default 1 or QGT_SEED)");
  };

  std::string game, env, x, y, theta, phi, builtin = "iid1", profile, angles, moves, p1, p2, asg = "default";
  bool mixed = false, search = false, bound = false, meyer = false, calibrate = false;
  std::size_t trials = 100, starts = 64;

  auto* nash = app.add_subcommand("nash", "Pure (and mixed) Nash equilibria");
  nash->add_option("game", game, "Game file or builtin:ic3|pd|penny")->required();
  nash->add_flag("--mixed", mixed, "Also enumerate mixed equilibria");
  nash->callback([&] { run = [&](Report& r) { cmd_nash(r, game, mixed); }; });

  for (const auto& [name, closed] : {std::pair{"correlated", false}, std::pair{"env-nash", true}}) {
    auto* sub = app.add_subcommand(name, closed ? "Equilibrium check in the closed environment game"
                                                : "Correlated-equilibrium check for a pair of variables");
    sub->add_option("game", game, "Game file or builtin:ic3")->required();
    sub->add_option("--env", env, "Environment file or builtin:ic3")->required();
    sub->add_option("--x", x, "Player 1 variable")->required();
    sub->add_option("--y", y, "Player 2 variable")->required();
    const bool c = closed;
    sub->callback([&, c] { run = [&, c](Report& r) { cmd_correlated(r, game, env, x, y, c); }; });
  }

  auto* commute = app.add_subcommand("commute-check", "Check that sharpening commutes with environments");
  commute->add_option("--trials", trials, "Random instances")->capture_default_str();
  seed_option(commute);
  commute->callback([&] { run = [&](Report& r) { cmd_commute(r, trials, seed); }; });

  auto* qeq = app.add_subcommand("quantum-eq", "Rotation profiles on the entangled pair");
  qeq->add_option("game", game, "Game file or builtin name")->required();
  qeq->add_option("--theta", theta, "Player 1 angle, e.g. pi/2");
  qeq->add_option("--phi", phi, "Player 2 angle");
  qeq->add_flag("--search", search, "Seeded best-response search");
  qeq->add_option("--starts", starts, "Search starts")->capture_default_str();
  seed_option(qeq);
  qeq->callback([&] { run = [&](Report& r) { cmd_quantum_eq(r, game, theta, phi, search, starts, seed); }; });

  auto* pq = app.add_subcommand("private-quantum", "Private-information game in the quantum environment");
  pq->add_option("--builtin", builtin, "Built-in game (iid1)")->capture_default_str();
  pq->add_option("--profile", profile, "a, b, or theta_red,theta_green,phi_red,phi_green");
  pq->add_flag("--classical-bound", bound, "Best classical symmetric payoff");
  pq->add_flag("--search", search, "Seeded per-type best-response search");
  pq->add_option("--starts", starts, "Search starts")->capture_default_str();
  seed_option(pq);
  pq->callback([&] { run = [&](Report& r) { cmd_private_quantum(r, builtin, profile, bound, search, starts, seed); }; });

  auto* bell = app.add_subcommand("bell", "Chain inequality for four measurement angles");
  bell->add_option("--angles", angles, "a,b,c,d")->required();
  bell->callback([&] { run = [&](Report& r) { cmd_bell(r, angles); }; });

  auto* penny = app.add_subcommand("pennyflip", "Sequential penny-flip protocol");
  penny->add_option("--moves", moves, "m1,m2,m3 with N, F, U, Uinv or [a,b,c,d]");
  penny->add_flag("--check-meyer", meyer, "Verify the U / U^-1 strategy");
  penny->callback([&] { run = [&](Report& r) { cmd_pennyflip(r, moves, meyer); }; });

  auto* ewl = app.add_subcommand("ewl", "Quaternion form of the entangled 2x2 game");
  ewl->add_option("game", game, "Game file or builtin:pd");
  ewl->add_option("--p1", p1, "Mixture such as '0.5*1 ; 0.5*i'");
  ewl->add_option("--p2", p2, "Mixture such as '0.5*j ; 0.5*k'");
  ewl->add_option("--assignment", asg, "default or paper")->capture_default_str();
  ewl->add_flag("--calibrate", calibrate, "Identify the direct simulation with the quaternion form");
  ewl->add_flag("--search", search, "Seeded equilibrium search");
  ewl->add_option("--starts", starts, "Search starts")->capture_default_str();
  seed_option(ewl);
  ewl->callback([&] { run = [&](Report& r) { cmd_ewl(r, game, p1, p2, asg, calibrate, search, starts, seed); }; });

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "Emit one JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!seed_given) seed = calibrate ? qgt::kDefaultCalibrationSeed : default_seed();
    Report r;
    run(r);
    if (as_json) {
      std::cout << r.data.dump(2) << "\n";
    } else {
      std::cout << r.text.str();
    }
  } catch (const qgt::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
