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

// Exact suprema of the Winsorized-tilted mean.
//
// S_{h,w,sigma} is the supremum of E_{h,w} X over zero-mean X with
// E X^2 <= sigma^2. It is attained at exactly one law, the two-point law
// P_{eps, sigma^2/eps} for an eps found by `eps_maximizer`, and
// S_{h,w,sigma} < K_w(h) sigma^2 with K_w(h) the best constant.
//
// Everything is computed for w in {-1, 0, 1} and carried to arbitrary w by
//   S_{h,w,sigma} = |w| S_{h|w|, w/|w|, sigma/|w|}.
//
// For w > 0 the variance-saturated case holds when sigma / w <= sigma_{h w};
// this is the rescaled form of the canonical condition sigma <= sigma_h (h is
// rescaled together with sigma).

#ifndef TILTBOUND_BOUNDS_H_
#define TILTBOUND_BOUNDS_H_

#include <string_view>

#include "tiltbound/core.h"
#include "tiltbound/roots.h"

namespace tiltbound {

// Which case produced the maximizing eps.
enum class Branch {
  // w = 1 and sigma <= sigma_h: eps* = sigma^2, the upper atom sits at w.
  kSaturatedVariance,
  // w = 1 and sigma > sigma_h: eps* = eps_tilde(h, sigma).
  kInteriorRoot,
  // w in {-1, 0}: eps* is the root of r_{w,1}.
  kNonposW,
};

std::string_view to_string(Branch b);

struct BoundResult {
  double supremum;
  TwoPointDist maximizer;
  double k_factor;
  double k_bound;
  Branch branch;

  double ratio() const { return supremum / k_bound; }
};

struct CanonicalParams {
  CanonicalW w_canon;
  double h_canon;
  double sigma_canon;
  double scale;
};

// h -> h|w|, sigma -> sigma/|w|, w -> sign(w); the identity for w = 0.
CanonicalParams canonicalize(const Params& p);

struct EpsMaximizer {
  double eps;
  Branch branch;
};

// The unique maximizer of m_{h,w,sigma}(eps) over the feasible set
// (0, sigma^2] for w = 1 and (|w|, inf) for w in {-1, 0}.
EpsMaximizer eps_maximizer(double h, CanonicalW w, double sigma,
                           const RootConfig& cfg = {});

// m_{h,w,sigma}(eps): the tilted mean of P_{eps, sigma^2/eps}.
double family_mean(double h, double w, double sigma, double eps);

BoundResult supremum_canonical(double h, CanonicalW w, double sigma,
                               const RootConfig& cfg = {});

// Any real w. Throws std::invalid_argument for invalid params.
BoundResult supremum(const Params& p, const RootConfig& cfg = {});

// K_1(h) = e^h - 1; K_w(h) = h / (-L_{-1}(-e^{hw-1})) for w in {-1, 0}.
double k_factor_canonical(double h, CanonicalW w);

// (e^{hw} - 1)/w for w > 0, h for w = 0, K_{-1}(h|w|)/|w| for w < 0.
double k_factor(double h, double w);

// rho_{h,w}(eps) = sup over admissible sigma of m_{h,w,sigma}(eps) / sigma^2:
//   w = 1:       (e^{(1+eps)h} - 1) / (1 + eps e^{(1+eps)h}),
//   w in {-1,0}: (1 - e^{-(w+eps)h}) / eps.
// Throws std::domain_error unless eps > max(0, -w).
double rho(double h, CanonicalW w, double eps);

// For w in {-1, 0}: eps_{h,w,*} = -(1 + L_{-1}(-e^{hw-1})) / h, where rho
// peaks at K_w(h). Zero for w = 0, where the peak is the limit eps -> 0+.
double rho_argmax(double h, CanonicalW w);

// E_{h,w}(X + m) = m + E_{h,w-m} X: returns the level w - m.
double shift_reduce(double h, double w, double mean);

}  // namespace tiltbound

#endif  // TILTBOUND_BOUNDS_H_
