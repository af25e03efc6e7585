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

#ifndef QGT_QUATERNION_HPP
#define QGT_QUATERNION_HPP

#include <array>
#include <cmath>
#include <charconv>
#include <string>

#include "qgt/error.hpp"

namespace qgt {

using Mat4 = std::array<std::array<double, 4>, 4>;
using Vec4 = std::array<double, 4>;

/// a + b i + c j + d k.
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }
  static constexpr Quaternion from(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

  constexpr Vec4 components() const { return {a, b, c, d}; }
  constexpr Quaternion conj() const { return {a, -b, -c, -d}; }
  constexpr double norm2() const { return a * a + b * b + c * c + d * d; }
  double norm() const { return std::sqrt(norm2()); }

  Quaternion normalized() const {
    const double n = norm();
    if (n == 0.0) throw ValidationError("cannot normalize the zero quaternion");
    return {a / n, b / n, c / n, d / n};
  }

  constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }
  constexpr bool operator==(const Quaternion&) const = default;

  /// Hamilton product: ij = k, jk = i, ki = j.
  friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
  }

  std::string to_string() const;
};

inline constexpr double dot(const Quaternion& p, const Quaternion& q) {
  return p.a * q.a + p.b * q.b + p.c * q.c + p.d * q.d;
}

/// Negates the j component. On the 2x2 special-unitary side this is
/// matrix transposition.
inline constexpr Quaternion transpose_twist(const Quaternion& q) { return {q.a, q.b, -q.c, q.d}; }

/// L(p) with p * q = L(p) q, components ordered (a, b, c, d).
inline constexpr Mat4 left_matrix(const Quaternion& p) {
  return {{{p.a, -p.b, -p.c, -p.d}, {p.b, p.a, -p.d, p.c}, {p.c, p.d, p.a, -p.b}, {p.d, -p.c, p.b, p.a}}};
}

/// R(q) with p * q = R(q) p.
inline constexpr Mat4 right_matrix(const Quaternion& q) {
  return {{{q.a, -q.b, -q.c, -q.d}, {q.b, q.a, q.d, -q.c}, {q.c, -q.d, q.a, q.b}, {q.d, q.c, -q.b, q.a}}};
}

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Matrix of the rotation x -> w x conj(w) on imaginary parts (w unit).
inline Mat3 rotation_matrix(const Quaternion& w) {
  const double s = w.a, x = w.b, y = w.c, z = w.d;
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - s * z), 2 * (x * z + s * y)},
           {2 * (x * y + s * z), 1 - 2 * (x * x + z * z), 2 * (y * z - s * x)},
           {2 * (x * z - s * y), 2 * (y * z + s * x), 1 - 2 * (x * x + y * y)}}};
}

/// Unit quaternion w with rotation_matrix(w) == r, for r in SO(3).
inline Quaternion quaternion_from_rotation(const Mat3& r) {
  const double trace = r[0][0] + r[1][1] + r[2][2];
  Quaternion w;
  if (trace > 0.0) {
    const double s = 2.0 * std::sqrt(1.0 + trace);
    w = {s / 4.0, (r[2][1] - r[1][2]) / s, (r[0][2] - r[2][0]) / s, (r[1][0] - r[0][1]) / s};
  } else if (r[0][0] > r[1][1] && r[0][0] > r[2][2]) {
    const double s = 2.0 * std::sqrt(1.0 + r[0][0] - r[1][1] - r[2][2]);
    w = {(r[2][1] - r[1][2]) / s, s / 4.0, (r[0][1] + r[1][0]) / s, (r[0][2] + r[2][0]) / s};
  } else if (r[1][1] > r[2][2]) {
    const double s = 2.0 * std::sqrt(1.0 + r[1][1] - r[0][0] - r[2][2]);
    w = {(r[0][2] - r[2][0]) / s, (r[0][1] + r[1][0]) / s, s / 4.0, (r[1][2] + r[2][1]) / s};
  } else {
    const double s = 2.0 * std::sqrt(1.0 + r[2][2] - r[0][0] - r[1][1]);
    w = {(r[1][0] - r[0][1]) / s, (r[0][2] + r[2][0]) / s, (r[1][2] + r[2][1]) / s, s / 4.0};
  }
  return w.normalized();
}

namespace detail {

inline void append_term(std::string& out, double v, const char* unit) {
  if (v == 0.0) return;
  if (v < 0.0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  const double m = std::abs(v);
  if (m != 1.0 || *unit == '\0') {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), m);
    out.append(buf, res.ptr);
  }
  out += unit;
}

}  // namespace detail

/// Shortest round-trip coefficients; zero terms are omitted.
inline std::string Quaternion::to_string() const {
  std::string s;
  detail::append_term(s, a, "");
  detail::append_term(s, b, "i");
  detail::append_term(s, c, "j");
  detail::append_term(s, d, "k");
  return s.empty() ? "0" : s;
}

}  // namespace qgt

#endif  // QGT_QUATERNION_HPP
