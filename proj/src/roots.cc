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

#include "tiltbound/roots.h"

#include <cmath>
#include <limits>
#include <string>

namespace tiltbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

// e^x - 1 - x for x >= 0 without cancellation.
double expm1mx(double x) {
  if (x >= 0.5) return std::expm1(x) - x;
  double term = 0.5 * x * x;
  double sum = term;
  for (int k = 3; k < 40 && term > 1e-18 * sum; ++k) {
    term *= x / k;
    sum += term;
  }
  return sum;
}

std::string describe(const char* what, double t) {
  return std::string(what) + ": no convergence near " + std::to_string(t);
}

// Solves g(origin + t) = 0 over t in (0, t_max], where g is negative for small
// t and positive for large t with a single sign change in between. Bracket
// expansion moves geometrically in log(t) (factors 2, 4, 16, 256, ...), so
// roots anywhere in the double range are reached within a dozen probes.
// Bisection runs in log(t) while the bracket spans more than a factor of two
// and arithmetically afterwards; a final secant step between the bracket ends
// polishes the result when it lowers the residual.
template <typename G>
double solve_sign_change(G g, double origin, double t0, double t_max,
                         const RootConfig& cfg, const char* what) {
  auto at = [&](double t) { return g(origin + t); };

  double lo = 0.0, hi = 0.0, g_lo = 0.0, g_hi = 0.0;
  const double g0 = at(t0);
  if (g0 == 0.0) return origin + t0;
  if (g0 < 0.0) {
    lo = t0;
    g_lo = g0;
    for (int k = 0;; ++k) {
      if (k >= cfg.max_iter || k > 11) throw ConvergenceError(describe(what, lo));
      const double cand = std::min(std::ldexp(t0, 1 << k), t_max);
      if (!std::isfinite(cand)) throw ConvergenceError(describe(what, lo));
      const double gc = at(cand);
      if (gc == 0.0) return origin + cand;
      if (gc > 0.0) {
        hi = cand;
        g_hi = gc;
        break;
      }
      if (cand == t_max) throw ConvergenceError(describe(what, cand));
      lo = cand;
      g_lo = gc;
    }
  } else {
    hi = t0;
    g_hi = g0;
    for (int k = 0;; ++k) {
      if (k >= cfg.max_iter || k > 11) throw ConvergenceError(describe(what, hi));
      const double cand = std::ldexp(t0, -(1 << k));
      if (!(cand > 0.0)) throw ConvergenceError(describe(what, hi));
      const double gc = at(cand);
      if (gc == 0.0) return origin + cand;
      if (gc < 0.0) {
        lo = cand;
        g_lo = gc;
        break;
      }
      hi = cand;
      g_hi = gc;
    }
  }

  double best = std::abs(g_lo) < std::abs(g_hi) ? lo : hi;
  double g_best = std::min(std::abs(g_lo), std::abs(g_hi));
  for (int i = 0; i < cfg.max_iter && g_best > cfg.abs_tol; ++i) {
    const double mid =
        hi > 2.0 * lo ? std::sqrt(lo) * std::sqrt(hi) : lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    const double gm = at(mid);
    if (std::abs(gm) < g_best) {
      best = mid;
      g_best = std::abs(gm);
    }
    if (gm == 0.0) break;
    if (gm < 0.0) {
      lo = mid;
      g_lo = gm;
    } else {
      hi = mid;
      g_hi = gm;
    }
  }

  if (g_best > cfg.abs_tol && std::isfinite(g_hi)) {
    const double t = lo - g_lo * (hi - lo) / (g_hi - g_lo);
    if (t > lo && t < hi) {
      const double gt = at(t);
      if (std::abs(gt) < g_best) {
        best = t;
        g_best = std::abs(gt);
      }
    }
  }
  if (!(g_best <= cfg.rel_tol)) throw ConvergenceError(describe(what, best));
  return origin + best;
}

void require_positive(double x, const char* what) {
  if (!(std::isfinite(x) && x > 0.0)) throw std::invalid_argument(what);
}

}  // namespace

void validate(const RootConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || cfg.max_iter < 1) {
    throw std::invalid_argument("RootConfig: invalid tolerances");
  }
}

double u_star(double h, double eps) {
  require_positive(h, "u_star: h must be positive");
  require_positive(eps, "u_star: eps must be positive");
  const double a = (1.0 + eps) * h;
  // 1 + eps h - e^{-a} = eps h - expm1(-a), both terms positive.
  const double den = eps * h - std::expm1(-a);
  if (a < 700.0) {
    // e^a - 1 - eps h = h + (e^a - 1 - a).
    const double num = h + expm1mx(a);
    return eps * (eps * num / den);
  }
  const double log_num = a + std::log1p(-(1.0 + eps * h) * std::exp(-a));
  const double log_u = 2.0 * std::log(eps) + log_num - std::log(den);
  return log_u >= std::log(std::numeric_limits<double>::max()) ? kInf
                                                                 : std::exp(log_u);
}

double sigma_h(double h, const RootConfig& cfg) {
  validate(cfg);
  require_positive(h, "sigma_h: h must be positive");
  const double eps = solve_sign_change(
      [h](double e) { return u_star(h, e) / e - 1.0; }, 0.0, 1.0, kInf, cfg,
      "sigma_h");
  return std::sqrt(eps);
}

double eps_tilde(double h, double sigma, const RootConfig& cfg) {
  validate(cfg);
  require_positive(h, "eps_tilde: h must be positive");
  require_positive(sigma, "eps_tilde: sigma must be positive");
  const double s2 = sigma * sigma;
  // Equivalent to sigma > sigma_h, without solving for sigma_h.
  if (!(u_star(h, s2) > s2)) {
    throw std::domain_error(
        "eps_tilde: sigma <= sigma_h, root lies outside (0, sigma^2); use the "
        "eps* = sigma^2 branch");
  }
  return solve_sign_change(
      [h, s2](double e) { return u_star(h, e) / s2 - 1.0; }, 0.0, 0.5 * s2, s2,
      cfg, "eps_tilde");
}

double r_w1(double h, CanonicalW w, double sigma, double eps) {
  const double e = std::exp((eps + to_double(w)) * h);
  return e * (1.0 + eps * h) * (eps * eps + sigma * sigma) -
         eps * eps * e * e - sigma * sigma;
}

double r_w1_normalized(double h, CanonicalW w, double sigma, double eps) {
  // With a = eps^2/(eps^2+sigma^2), b = 1 - a and x = (eps+w)h:
  //   r / scale = (eps h - a expm1(x) - b expm1(-x)) / (1 + eps h).
  const double x = (eps + to_double(w)) * h;
  const double e2 = eps * eps;
  const double s2 = sigma * sigma;
  const double a = e2 / (e2 + s2);
  const double b = s2 / (e2 + s2);
  return (eps * h - a * std::expm1(x) - b * std::expm1(-x)) / (1.0 + eps * h);
}

double eps_opt_nonpos_w(double h, CanonicalW w, double sigma,
                        const RootConfig& cfg) {
  validate(cfg);
  require_positive(h, "eps_opt_nonpos_w: h must be positive");
  require_positive(sigma, "eps_opt_nonpos_w: sigma must be positive");
  if (w == CanonicalW::kPlusOne) {
    throw std::invalid_argument("eps_opt_nonpos_w: w must be -1 or 0");
  }
  const double origin = std::abs(to_double(w));
  return solve_sign_change(
      [h, w, sigma](double e) { return -r_w1_normalized(h, w, sigma, e); },
      origin, 1.0, kInf, cfg, "eps_opt_nonpos_w");
}

double lambert_w_m1(double z) {
  static const double kBranch = -std::exp(-1.0);
  if (!(z >= kBranch && z < 0.0)) {
    throw std::domain_error("lambert_w_m1: z must lie in [-1/e, 0)");
  }
  if (z == kBranch) return -1.0;

  double w;
  if (z < -0.25) {
    // Series in p = -sqrt(2 (1 + e z)) about the branch point.
    const double p = -std::sqrt(std::max(0.0, 2.0 * (1.0 + std::exp(1.0) * z)));
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  } else {
    const double l1 = std::log(-z);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }

  // Halley iterations on w e^w - z.
  for (int i = 0; i < 64; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    if (f == 0.0 || wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (!(std::abs(step) > 4.0 * kEpsilon * std::abs(w))) break;
  }
  w = std::min(w, -1.0);

  // One Newton step in extended precision so the result is the nearest double
  // to the root; for |w| in the hundreds that is what keeps the round trip
  // within 1e-13.
  if (w < -1.0 - 1e-4) {
    const long double lw = w;
    const long double elw = std::exp(lw);
    const long double f = lw * elw - static_cast<long double>(z);
    w = static_cast<double>(lw - f / (elw * (lw + 1.0L)));
  }
  return w;
}

double lambert_w_m1_exp(double a) {
  if (!(a >= 1.0) || !std::isfinite(a)) {
    throw std::domain_error("lambert_w_m1_exp: a must be >= 1");
  }
  if (a < 700.0) return lambert_w_m1(-std::exp(-a));
  // u + log(-u) + a = 0, Newton from the leading asymptotic term.
  double u = -a - std::log(a);
  for (int i = 0; i < 32; ++i) {
    const double g = u + std::log(-u) + a;
    const double step = g / (1.0 + 1.0 / u);
    u -= step;
    if (!(std::abs(step) > 4.0 * kEpsilon * std::abs(u))) break;
  }
  return u;
}

}  // namespace tiltbound
