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

#include "tiltbound/bounds.h"

#include <cassert>
#include <cmath>

namespace tiltbound {

namespace {

// L_{-1}(-e^{hw-1}) for w in {-1, 0}.
double lambert_at_level(double h, CanonicalW w) {
  const double a = 1.0 - h * to_double(w);
  assert(a >= 1.0);
  return lambert_w_m1_exp(a);
}

void require_positive(double x, const char* what) {
  if (!(std::isfinite(x) && x > 0.0)) throw std::invalid_argument(what);
}

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::kSaturatedVariance:
      return "SaturatedVariance";
    case Branch::kInteriorRoot:
      return "InteriorRoot";
    case Branch::kNonposW:
      return "NonposW";
  }
  return "?";
}

CanonicalParams canonicalize(const Params& p) {
  validate(p);
  if (p.w == 0.0) return {CanonicalW::kZero, p.h, p.sigma, 1.0};
  const double scale = std::abs(p.w);
  return {p.w > 0.0 ? CanonicalW::kPlusOne : CanonicalW::kMinusOne,
          p.h * scale, p.sigma / scale, scale};
}

EpsMaximizer eps_maximizer(double h, CanonicalW w, double sigma,
                           const RootConfig& cfg) {
  require_positive(h, "eps_maximizer: h must be positive");
  require_positive(sigma, "eps_maximizer: sigma must be positive");
  if (w != CanonicalW::kPlusOne) {
    return {eps_opt_nonpos_w(h, w, sigma, cfg), Branch::kNonposW};
  }
  const double s2 = sigma * sigma;
  // u_*(h, sigma^2) <= sigma^2 exactly when sigma <= sigma_h.
  if (u_star(h, s2) <= s2) return {s2, Branch::kSaturatedVariance};
  return {eps_tilde(h, sigma, cfg), Branch::kInteriorRoot};
}

double family_mean(double h, double w, double sigma, double eps) {
  return two_point_mean(TwoPointDist(eps, sigma * sigma / eps), h, w);
}

BoundResult supremum_canonical(double h, CanonicalW w, double sigma,
                               const RootConfig& cfg) {
  const EpsMaximizer best = eps_maximizer(h, w, sigma, cfg);
  const TwoPointDist maximizer(best.eps, sigma * sigma / best.eps);
  const double k = k_factor_canonical(h, w);
  return {two_point_mean(maximizer, h, to_double(w)), maximizer, k,
          k * sigma * sigma, best.branch};
}

BoundResult supremum(const Params& p, const RootConfig& cfg) {
  const CanonicalParams c = canonicalize(p);
  const BoundResult r = supremum_canonical(c.h_canon, c.w_canon, c.sigma_canon, cfg);
  if (c.scale == 1.0) return r;
  const double k = k_factor(p.h, p.w);
  return {c.scale * r.supremum, r.maximizer.scaled(c.scale), k,
          k * p.sigma * p.sigma, r.branch};
}

double k_factor_canonical(double h, CanonicalW w) {
  require_positive(h, "k_factor_canonical: h must be positive");
  if (w == CanonicalW::kPlusOne) return std::expm1(h);
  return h / -lambert_at_level(h, w);
}

double k_factor(double h, double w) {
  require_positive(h, "k_factor: h must be positive");
  if (!std::isfinite(w)) throw std::invalid_argument("k_factor: w not finite");
  if (w > 0.0) return std::expm1(h * w) / w;
  if (w == 0.0) return h;
  return k_factor_canonical(h * -w, CanonicalW::kMinusOne) / -w;
}

double rho(double h, CanonicalW w, double eps) {
  require_positive(h, "rho: h must be positive");
  const double wd = to_double(w);
  if (!(eps > std::max(0.0, -wd)) || !std::isfinite(eps)) {
    throw std::domain_error("rho: eps outside (max(0, -w), inf)");
  }
  if (w == CanonicalW::kPlusOne) {
    const double a = (1.0 + eps) * h;
    return -std::expm1(-a) / (std::exp(-a) + eps);
  }
  return -std::expm1(-(wd + eps) * h) / eps;
}

double rho_argmax(double h, CanonicalW w) {
  require_positive(h, "rho_argmax: h must be positive");
  if (w == CanonicalW::kPlusOne) {
    throw std::invalid_argument("rho_argmax: w must be -1 or 0");
  }
  if (w == CanonicalW::kZero) return 0.0;
  return -(1.0 + lambert_at_level(h, w)) / h;
}

double shift_reduce(double /*h*/, double w, double mean) { return w - mean; }

}  // namespace tiltbound
