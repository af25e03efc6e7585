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

#ifndef QGT_QUANTUM_STATE_HPP
#define QGT_QUANTUM_STATE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "qgt/error.hpp"

namespace qgt {

using Complex = std::complex<double>;

inline constexpr double kUnitaryTolerance = 1e-10;

/// A square complex matrix acting on column vectors, row-major. Construction
/// checks unitarity (U^dagger U = I entrywise within 1e-10).
class UnitaryOp {
 public:
  UnitaryOp(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) throw ValidationError("operator must be a square matrix");
    const double r = unitarity_residual();
    if (!(r <= kUnitaryTolerance)) {
      throw ValidationError("operator is not unitary (residual " + std::to_string(r) + ")");
    }
  }

  static UnitaryOp identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return UnitaryOp(dim, std::move(e));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Complex>& entries() const { return entries_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  UnitaryOp adjoint() const {
    std::vector<Complex> e(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) e[c * dim_ + r] = std::conj((*this)(r, c));
    }
    return UnitaryOp(dim_, std::move(e));
  }

  /// Max entrywise |U^dagger U - I|.
  double unitarity_residual() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < dim_; ++k) s += std::conj((*this)(k, r)) * (*this)(k, c);
        worst = std::max(worst, std::abs(s - (r == c ? 1.0 : 0.0)));
      }
    }
    return worst;
  }

  friend UnitaryOp operator*(const UnitaryOp& a, const UnitaryOp& b) {
    if (a.dim_ != b.dim_) throw ValidationError("operator dimension mismatch");
    const std::size_t n = a.dim_;
    std::vector<Complex> e(n * n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t c = 0; c < n; ++c) e[r * n + c] += a(r, k) * b(k, c);
      }
    }
    return UnitaryOp(n, std::move(e));
  }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// A pure state of two subsystems of dimensions (n1, n2). Amplitude (i, j)
/// lives at i * n2 + j; index 0 is H, index 1 is T.
class StateVector {
 public:
  StateVector(std::size_t n1, std::size_t n2, std::vector<Complex> amps)
      : n1_(n1), n2_(n2), amps_(std::move(amps)) {
    if (n1_ == 0 || n2_ == 0 || amps_.size() != n1_ * n2_) {
      throw ValidationError("state amplitude count does not match its dimensions");
    }
    const double n = norm();
    if (!std::isfinite(n)) throw ValidationError("state norm is not finite");
    if (n == 0.0) throw ValidationError("state vector is zero");
  }

  /// |i> (x) |j>.
  static StateVector basis(std::size_t n1, std::size_t n2, std::size_t i, std::size_t j) {
    std::vector<Complex> a(n1 * n2, 0.0);
    a.at(i * n2 + j) = 1.0;
    return StateVector(n1, n2, std::move(a));
  }

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  const std::vector<Complex>& amps() const { return amps_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return amps_[i * n2_ + j]; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  StateVector normalized() const {
    const double n = norm();
    std::vector<Complex> a(amps_);
    for (auto& x : a) x /= n;
    return StateVector(n1_, n2_, std::move(a));
  }

  StateVector scaled(Complex s) const {
    std::vector<Complex> a(amps_);
    for (auto& x : a) x *= s;
    return StateVector(n1_, n2_, std::move(a));
  }

  /// <this|other>, conjugate-linear in this.
  Complex inner(const StateVector& other) const {
    if (other.amps_.size() != amps_.size()) throw ValidationError("state dimension mismatch");
    Complex s = 0.0;
    for (std::size_t k = 0; k < amps_.size(); ++k) s += std::conj(amps_[k]) * other.amps_[k];
    return s;
  }

 private:
  std::size_t n1_;
  std::size_t n2_;
  std::vector<Complex> amps_;
};

/// (H (x) H + T (x) T) / sqrt(2).
inline StateVector entangled_pair() {
  const double h = std::numbers::sqrt2 / 2.0;
  return StateVector(2, 2, {h, 0.0, 0.0, h});
}

/// (u (x) v) s: u acts on the first factor, v on the second.
inline StateVector apply_local(const StateVector& s, const UnitaryOp& u, const UnitaryOp& v) {
  if (u.dim() != s.n1() || v.dim() != s.n2()) throw ValidationError("local operator dimension mismatch");
  const std::size_t n1 = s.n1(), n2 = s.n2();
  // Apply v along the second index, then u along the first.
  std::vector<Complex> tmp(n1 * n2, 0.0), out(n1 * n2, 0.0);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      for (std::size_t l = 0; l < n2; ++l) tmp[i * n2 + j] += v(j, l) * s(i, l);
    }
  }
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t k = 0; k < n1; ++k) {
      const Complex uik = u(i, k);
      for (std::size_t j = 0; j < n2; ++j) out[i * n2 + j] += uik * tmp[k * n2 + j];
    }
  }
  return StateVector(n1, n2, std::move(out));
}

/// Computational-basis outcome probabilities, P(i, j) at i * n2 + j.
struct BasisDistribution {
  std::size_t n1;
  std::size_t n2;
  std::vector<double> probs;

  double operator()(std::size_t i, std::size_t j) const { return probs[i * n2 + j]; }
};

inline BasisDistribution measure_joint(const StateVector& s) {
  double total = 0.0;
  for (const auto& a : s.amps()) total += std::norm(a);
  if (total == 0.0) throw ValidationError("cannot measure the zero vector");
  BasisDistribution d{s.n1(), s.n2(), {}};
  d.probs.reserve(s.amps().size());
  for (const auto& a : s.amps()) d.probs.push_back(std::norm(a) / total);
  return d;
}

/// ((cos t, sin t), (-sin t, cos t)) in the {H, T} basis.
inline UnitaryOp rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return UnitaryOp(2, {c, s, -s, c});
}

struct BellChainResult {
  double lhs;
  double rhs;
  bool violated;
};

/// Probability that measurements after rotating the two halves of the
/// entangled pair by a and b disagree. Equals sin^2(a - b).
inline double rotation_disagreement(double a, double b) {
  const auto d = measure_joint(apply_local(entangled_pair(), rotation(a), rotation(b)));
  const double p = d(0, 1) + d(1, 0);
  const double s = std::sin(a - b);
  if (std::abs(p - s * s) > 1e-12) throw InternalError("disagreement probability disagrees with sin^2");
  return p;
}

/// Chain inequality for four measurement angles. Only pairwise quantities
/// are computed; no joint law of all four outcomes exists.
inline BellChainResult bell_chain_demo(double ax, double ay, double az, double aw) {
  BellChainResult r{rotation_disagreement(ax, aw),
                    rotation_disagreement(ax, ay) + rotation_disagreement(ay, az) +
                        rotation_disagreement(az, aw),
                    false};
  r.violated = r.lhs > r.rhs + 1e-12;
  return r;
}

}  // namespace qgt

#endif  // QGT_QUANTUM_STATE_HPP
