// Copyright 2026 The Tiltbound Authors
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

// Finite discrete distributions and the Winsorized-tilted mean
//
//   E_{h,w} X = E[X e^{h (X ^ w)}] / E[e^{h (X ^ w)}],
//
// where X ^ w = min(X, w). All evaluations factor the largest exponent out of
// numerator and denominator, so nothing overflows for finite inputs.

#ifndef TILTBOUND_CORE_H_
#define TILTBOUND_CORE_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace tiltbound {

struct Atom {
  double x;
  double p;
};

// Immutable probability distribution on finitely many points. Atoms are kept
// sorted by x; atoms closer than 1e-14 * max(1, |x|) are merged at
// construction. Masses must be positive and sum to 1 within 1e-12.
class DiscreteDist {
 public:
  static constexpr double kMassTolerance = 1e-12;
  static constexpr double kMergeTolerance = 1e-14;

  // Throws std::invalid_argument when the invariants fail.
  explicit DiscreteDist(std::vector<Atom> atoms);

  static DiscreteDist point_mass(double x);

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  double mean() const;
  double variance() const;
  double second_moment() const;
  double support_inf() const { return atoms_.front().x; }
  double support_sup() const { return atoms_.back().x; }

  // Law of X + m.
  DiscreteDist shifted(double m) const;
  // Law of c X; c must be nonzero.
  DiscreteDist scaled(double c) const;

 private:
  std::vector<Atom> atoms_;
};

// The zero-mean law P_{u,v} on {-u, v}: mass v/(u+v) at -u and u/(u+v) at v.
class TwoPointDist {
 public:
  // Throws std::invalid_argument unless u and v are positive and finite.
  TwoPointDist(double u, double v);

  double u() const { return u_; }
  double v() const { return v_; }
  double mass_left() const { return v_ / (u_ + v_); }
  double mass_right() const { return u_ / (u_ + v_); }
  double variance() const { return u_ * v_; }

  DiscreteDist as_discrete() const;
  TwoPointDist scaled(double c) const;

 private:
  double u_;
  double v_;
};

// Tilt strength h > 0, Winsorization level w (any real), standard-deviation
// cap sigma > 0.
struct Params {
  double h;
  double w;
  double sigma;
};

// Throws std::invalid_argument when h or sigma is not positive and finite, or
// w is not finite.
void validate(const Params& p);

// The three Winsorization levels every bound reduces to by rescaling.
enum class CanonicalW : int { kMinusOne = -1, kZero = 0, kPlusOne = 1 };

inline double to_double(CanonicalW w) { return static_cast<int>(w); }

// E[f(X) e^{h (X ^ w)}] / E[e^{h (X ^ w)}] for any real h; w may be +inf.
template <typename F>
double tilted_expectation(const DiscreteDist& dist, double h, double w,
                          F&& f) {
  double top = -std::numeric_limits<double>::infinity();
  for (const Atom& a : dist.atoms()) top = std::max(top, h * std::min(a.x, w));
  double num = 0.0;
  double den = 0.0;
  for (const Atom& a : dist.atoms()) {
    const double weight = a.p * std::exp(h * std::min(a.x, w) - top);
    num += f(a.x) * weight;
    den += weight;
  }
  return num / den;
}

// E_{h,w} X. Requires h > 0.
double tilted_mean(const DiscreteDist& dist, double h, double w);

// E_{h,w} X for X ~ P_{u,v}, evaluated as
//   u v (1 - e^{a-b}) / (v e^{a-b} + u),  a = h (-u ^ w), b = h (v ^ w),
// which is exact for every w and free of cancellation. Requires h > 0.
double two_point_mean(const TwoPointDist& tp, double h, double w);

// Membership of P_{u,v} in the extremal family for level w: -u < w <= v.
bool validate_extremal(const TwoPointDist& tp, double w);

}  // namespace tiltbound

#endif  // TILTBOUND_CORE_H_
