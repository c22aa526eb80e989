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

// Characteristic roots of the extremal problem and the W_{-1} branch of the
// Lambert function.
//
// Each root is the unique sign change of a monotone-sign function, so the
// solvers bracket first and then bisect; nothing here relies on a good
// starting point. Target functions are evaluated in normalized form (the
// dominant exponential divided out), so the residual contracts below are
// relative and every solver works for h * eps up to several hundred.

#ifndef TILTBOUND_ROOTS_H_
#define TILTBOUND_ROOTS_H_

#include <stdexcept>

#include "tiltbound/core.h"

namespace tiltbound {

struct RootConfig {
  // Maximum accepted normalized residual of the returned root.
  double rel_tol = 1e-12;
  // Bisection stops early once the normalized residual drops below this.
  double abs_tol = 1e-14;
  // Cap on bracket expansions and, separately, on bisection steps.
  int max_iter = 200;
};

// Throws std::invalid_argument for nonpositive tolerances or max_iter < 1.
void validate(const RootConfig& cfg);

// Raised when a bracket cannot be found or the residual contract fails.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// u_*(h, eps) = eps^2 (e^{(1+eps)h} - 1 - eps h) / (1 + eps h - e^{-(1+eps)h}).
// Returns +inf when the value exceeds the double range; callers treat that as
// "positive" in sign tests.
double u_star(double h, double eps);

// The unique sigma_h > 0 with u_*(h, sigma_h^2) = sigma_h^2. For eps > 0,
// u_*(h, eps) - eps has the sign of eps - sigma_h^2.
double sigma_h(double h, const RootConfig& cfg = {});

// For sigma > sigma_h, the unique root in (0, sigma^2) of u_*(h, eps) = sigma^2.
// Throws std::domain_error when sigma <= sigma_h.
double eps_tilde(double h, double sigma, const RootConfig& cfg = {});

// r_{w,1}(eps) = e^{(eps+w)h}(1+eps h)(eps^2+sigma^2) - eps^2 e^{2(eps+w)h}
//                - sigma^2.
double r_w1(double h, CanonicalW w, double sigma, double eps);

// r_{w,1}(eps) divided by e^{(eps+w)h}(1+eps h)(eps^2+sigma^2); finite or -inf.
double r_w1_normalized(double h, CanonicalW w, double sigma, double eps);

// For w in {-1, 0}: the unique root in (|w|, inf) of r_{w,1}, where r_{w,1}
// changes sign from + to -. Throws std::invalid_argument for w = +1.
double eps_opt_nonpos_w(double h, CanonicalW w, double sigma,
                        const RootConfig& cfg = {});

// The root u <= -1 of u e^u = z for z in [-1/e, 0). Throws std::domain_error
// outside that interval. |u e^u - z| <= 1e-13 |z|.
double lambert_w_m1(double z);

// L_{-1}(-e^{-a}) for a >= 1, valid where e^{-a} underflows.
double lambert_w_m1_exp(double a);

}  // namespace tiltbound

#endif  // TILTBOUND_ROOTS_H_
