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

#ifndef QGT_TEXT_FORMAT_HPP
#define QGT_TEXT_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <algorithm>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "qgt/environment.hpp"
#include "qgt/error.hpp"
#include "qgt/ewl.hpp"
#include "qgt/game.hpp"
#include "qgt/quantum_state.hpp"
#include "qgt/quaternion.hpp"

namespace qgt::text {

/// Shortest decimal text that reads back as the same double.
inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  return out;
}

inline std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline double parse_decimal(std::string_view s) {
  std::string t = trim(s);
  std::string_view v = t;
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ValidationError("not a number: '" + t + "'");
  }
  return out;
}

/// A decimal literal or a rational `a/b`; the quotient is formed once.
inline double parse_number(std::string_view s) {
  const std::string t = trim(s);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return parse_decimal(t);
  const double num = parse_decimal(t.substr(0, slash));
  const double den = parse_decimal(t.substr(slash + 1));
  if (den == 0.0) throw ValidationError("zero denominator in '" + t + "'");
  return num / den;
}

/// Angles in radians: decimals, rationals, or multiples of pi such as
/// `pi/8`, `3pi/4`, `-pi`, `3*pi/4`.
inline double parse_angle(std::string_view s) {
  std::string t = trim(s);
  const auto p = t.find("pi");
  if (p == std::string::npos) return parse_number(t);
  std::string coef = trim(t.substr(0, p));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  double c = 1.0;
  if (coef == "-") {
    c = -1.0;
  } else if (!coef.empty() && coef != "+") {
    c = parse_number(coef);
  }
  double den = 1.0;
  const std::string rest = trim(t.substr(p + 2));
  if (!rest.empty()) {
    if (rest.front() != '/') throw ValidationError("bad angle '" + t + "'");
    den = parse_decimal(rest.substr(1));
    if (den == 0.0) throw ValidationError("zero denominator in '" + t + "'");
  }
  return c * std::numbers::pi / den;
}

inline std::vector<double> parse_angle_list(std::string_view s) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_angle(part));
  return out;
}

namespace detail {

// Splits `a+bi-cj` into signed terms, keeping exponent signs attached.
inline std::vector<std::string> signed_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char ch = s[k];
    if (ch == ' ' || ch == '\t') continue;
    const bool exponent = !cur.empty() && (cur.back() == 'e' || cur.back() == 'E');
    if ((ch == '+' || ch == '-') && !cur.empty() && !exponent) {
      out.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline double term_coefficient(std::string body, const std::string& whole) {
  if (!body.empty() && body.back() == '*') body.pop_back();
  if (body.empty() || body == "+") return 1.0;
  if (body == "-") return -1.0;
  try {
    return parse_number(body);
  } catch (const ValidationError&) {
    throw ValidationError("bad term in '" + whole + "'");
  }
}

}  // namespace detail

/// `a+bi+cj+dk` with any subset of terms in any order.
inline Quaternion parse_quaternion_raw(std::string_view s) {
  const std::string t = trim(s);
  if (t.empty()) throw ValidationError("empty quaternion literal");
  Quaternion q;
  for (const auto& term : detail::signed_terms(t)) {
    const char unit = term.back();
    if (unit == 'i' || unit == 'j' || unit == 'k') {
      const double c = detail::term_coefficient(term.substr(0, term.size() - 1), t);
      (unit == 'i' ? q.b : unit == 'j' ? q.c : q.d) += c;
    } else {
      q.a += detail::term_coefficient(term, t);
    }
  }
  return q;
}

/// As parse_quaternion_raw, scaled to unit length.
inline Quaternion parse_quaternion(std::string_view s) { return parse_quaternion_raw(s).normalized(); }

/// `w1*q1 ; w2*q2 ; ...`; a term without `*` has weight 1. Weights must
/// sum to 1 within 1e-9 and are then renormalized.
inline MixedQuatStrategy parse_quat_mixture(std::string_view s) {
  std::vector<std::pair<Quaternion, double>> support;
  double total = 0.0;
  for (const auto& part : split(s, ';')) {
    if (part.empty()) throw ValidationError("empty mixture term in '" + std::string(s) + "'");
    const auto star = part.find('*');
    double w = 1.0;
    std::string q = part;
    if (star != std::string::npos) {
      w = parse_number(part.substr(0, star));
      q = part.substr(star + 1);
    }
    if (w < 0.0) throw ValidationError("negative mixture weight");
    support.emplace_back(parse_quaternion(q), w);
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw ValidationError("mixture weights sum to " + format_double(total));
  for (auto& [q, w] : support) w /= total;
  return MixedQuatStrategy(std::move(support));
}

inline std::string format_quat_mixture(const MixedQuatStrategy& m) {
  std::string out;
  for (const auto& [q, w] : m.support()) {
    if (!out.empty()) out += " ; ";
    out += format_double(w) + "*" + q.to_string();
  }
  return out;
}

/// `x`, `yi`, or `x+yi`.
inline Complex parse_complex(std::string_view s) {
  const std::string t = trim(s);
  if (t.empty()) throw ValidationError("empty complex literal");
  Complex z;
  for (const auto& term : detail::signed_terms(t)) {
    if (term.back() == 'i') {
      z += Complex(0.0, detail::term_coefficient(term.substr(0, term.size() - 1), t));
    } else {
      z += detail::term_coefficient(term, t);
    }
  }
  return z;
}

/// Splits on commas that are not inside brackets.
inline std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (const char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth < 0) throw ValidationError("unbalanced brackets in '" + std::string(s) + "'");
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw ValidationError("unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(trim(cur));
  return out;
}

/// `[a,b,c,d]`: a row-major 2x2 complex matrix.
inline UnitaryOp parse_matrix_token(std::string_view s) {
  const std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ValidationError("bad matrix token '" + t + "'");
  const auto parts = split(std::string_view(t).substr(1, t.size() - 2), ',');
  if (parts.size() != 4) throw ValidationError("a 2x2 matrix needs 4 entries: '" + t + "'");
  std::vector<Complex> e;
  for (const auto& p : parts) e.push_back(parse_complex(p));
  return UnitaryOp(2, std::move(e));
}

// ---------------------------------------------------------------------------
// Game files.

namespace detail {

struct Line {
  std::size_t number;
  std::string text;
};

inline std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    ++n;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) out.push_back({n, line});
  }
  return out;
}

[[noreturn]] inline void fail(const Line& l, const std::string& msg) {
  throw ValidationError("line " + std::to_string(l.number) + ": " + msg);
}

// True for `key: value` lines, with the value stored in `value`.
inline bool keyed(const std::string& line, const std::string& key, std::string& value) {
  if (line.rfind(key + ":", 0) != 0) return false;
  value = trim(std::string_view(line).substr(key.size() + 1));
  return true;
}

}  // namespace detail

inline Game parse_game(const std::string& text) {
  std::string name;
  LabelList rows, cols;
  std::map<Profile, PayoffPair> cells;
  for (const auto& l : detail::content_lines(text)) {
    std::string v;
    if (detail::keyed(l.text, "game", v)) {
      name = v;
    } else if (detail::keyed(l.text, "rows", v)) {
      rows = words(v);
    } else if (detail::keyed(l.text, "cols", v)) {
      cols = words(v);
    } else {
      const auto w = words(l.text);
      if (w.size() != 6 || w[0] != "payoff" || w[3] != "=") detail::fail(l, "expected 'payoff <row> <col> = <p1> <p2>'");
      if (rows.empty() || cols.empty()) detail::fail(l, "payoff before rows/cols declarations");
      if (std::find(rows.begin(), rows.end(), w[1]) == rows.end()) detail::fail(l, "unknown row '" + w[1] + "'");
      if (std::find(cols.begin(), cols.end(), w[2]) == cols.end()) detail::fail(l, "unknown col '" + w[2] + "'");
      PayoffPair p;
      try {
        p = {parse_number(w[4]), parse_number(w[5])};
      } catch (const ValidationError& e) {
        detail::fail(l, e.what());
      }
      if (!cells.emplace(Profile{w[1], w[2]}, p).second) detail::fail(l, "duplicate cell " + w[1] + " " + w[2]);
    }
  }
  if (rows.empty() || cols.empty()) throw ValidationError("game file needs rows: and cols:");
  return Game::from_cells(name.empty() ? "game" : name, rows, cols, cells);
}

inline std::string serialize_game(const Game& g) {
  std::string out = "game: " + g.name() + "\nrows:";
  for (const auto& r : g.strategies1()) out += " " + r;
  out += "\ncols:";
  for (const auto& c : g.strategies2()) out += " " + c;
  out += "\n";
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const auto& p = g.at(i, j);
      out += "payoff " + g.strategies1()[i] + " " + g.strategies2()[j] + " = " + format_double(p.first) + " " +
             format_double(p.second) + "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Environment files.

/// Variables take values in the given strategy sets. Atom probabilities
/// must sum to 1 within 1e-9 and are renormalized.
inline Environment parse_environment(const std::string& text, const LabelList& strategies1,
                                     const LabelList& strategies2) {
  std::vector<std::string> names1, names2;
  std::optional<std::size_t> declared;
  std::vector<std::string> atoms;
  std::vector<double> probs;
  std::map<std::string, std::vector<Label>> values;
  for (const auto& l : detail::content_lines(text)) {
    std::string v;
    if (detail::keyed(l.text, "var1", v)) {
      names1 = words(v);
    } else if (detail::keyed(l.text, "var2", v)) {
      names2 = words(v);
    } else if (detail::keyed(l.text, "atoms", v)) {
      double n = 0.0;
      try {
        n = parse_decimal(v);
      } catch (const ValidationError& e) {
        detail::fail(l, e.what());
      }
      if (n < 1 || n != std::floor(n)) detail::fail(l, "atom count must be a positive integer");
      declared = static_cast<std::size_t>(n);
    } else {
      const auto w = words(l.text);
      if (w.size() < 4 || w[0] != "atom" || w[2] != "prob") detail::fail(l, "expected 'atom <id> prob <p> VAR=label ...'");
      if (names1.empty() || names2.empty()) detail::fail(l, "atoms must follow var1:/var2: declarations");
      atoms.push_back(w[1]);
      try {
        probs.push_back(parse_number(w[3]));
      } catch (const ValidationError& e) {
        detail::fail(l, e.what());
      }
      std::set<std::string> seen;
      for (std::size_t k = 4; k < w.size(); ++k) {
        const auto eq = w[k].find('=');
        if (eq == std::string::npos) detail::fail(l, "expected VAR=label, got '" + w[k] + "'");
        const std::string var = w[k].substr(0, eq), label = w[k].substr(eq + 1);
        const bool p1 = std::find(names1.begin(), names1.end(), var) != names1.end();
        const bool p2 = std::find(names2.begin(), names2.end(), var) != names2.end();
        if (!p1 && !p2) detail::fail(l, "undeclared variable '" + var + "'");
        const auto& labels = p1 ? strategies1 : strategies2;
        if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
          detail::fail(l, "'" + label + "' is not a strategy of " + var + "'s player");
        }
        if (!seen.insert(var).second) detail::fail(l, "variable '" + var + "' assigned twice");
        values[var].push_back(label);
      }
      for (const auto& names : {names1, names2}) {
        for (const auto& n : names) {
          if (!seen.count(n)) detail::fail(l, "variable '" + n + "' not assigned on atom " + w[1]);
        }
      }
    }
  }
  if (atoms.empty()) throw ValidationError("environment file has no atoms");
  if (declared && *declared != atoms.size()) {
    throw ValidationError("atoms: declares " + std::to_string(*declared) + " atoms but " +
                          std::to_string(atoms.size()) + " are listed");
  }
  double total = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw ValidationError("negative atom probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw ValidationError("atom probabilities sum to " + format_double(total));
  for (auto& p : probs) p /= total;
  auto space = std::make_shared<const SampleSpace>(std::move(atoms), std::move(probs));
  std::vector<RandomVariable> v1, v2;
  for (const auto& n : names1) v1.emplace_back(n, space, values[n], Player::One);
  for (const auto& n : names2) v2.emplace_back(n, space, values[n], Player::Two);
  return Environment(strategies1, strategies2, space, std::move(v1), std::move(v2));
}

inline std::string serialize_environment(const Environment& e) {
  std::string out = "var1:";
  for (const auto& v : e.vars1) out += " " + v.name;
  out += "\nvar2:";
  for (const auto& v : e.vars2) out += " " + v.name;
  out += "\natoms: " + std::to_string(e.space->size()) + "\n";
  for (std::size_t a = 0; a < e.space->size(); ++a) {
    out += "atom " + e.space->atoms()[a] + " prob " + format_double(e.space->probs()[a]);
    for (const auto* vars : {&e.vars1, &e.vars2}) {
      for (const auto& v : *vars) out += " " + v.name + "=" + v.values[a];
    }
    out += "\n";
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qgt::text

#endif  // QGT_TEXT_FORMAT_HPP
