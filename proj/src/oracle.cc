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

#include "tiltbound/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

#include "tiltbound/sampling.h"

namespace tiltbound {

namespace {

constexpr double kSlack = 1e-9;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string cell(const Params& p) {
  return "h=" + num(p.h) + " w=" + num(p.w) + " sigma=" + num(p.sigma);
}

std::vector<double> log_space(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * i / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

// Variance for the i-th random law of a check; see random_dist_check.
double draw_variance(Rng& rng, std::size_t i, double sigma, double fraction) {
  const double s2 = sigma * sigma;
  if (fraction > 0.0) return fraction * s2;
  if (i % 2 == 0) return s2;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return s2 * (1.0 - unit(rng));  // (0, 1]
}

template <typename Fn>
void for_each_random_dist(const Params& p, const GridSpec& g, double fraction,
                          Fn&& fn) {
  Rng rng(g.seed);
  for (int i = 0; i < g.random_dists; ++i) {
    const int support =
        g.support_sizes[static_cast<std::size_t>(i) % g.support_sizes.size()];
    const double var = draw_variance(rng, static_cast<std::size_t>(i), p.sigma,
                                     fraction);
    fn(random_zero_mean_dist(rng, support, p.sigma, var));
  }
}

}  // namespace

void validate(const GridSpec& g) {
  if (g.eps_points < 10) throw std::invalid_argument("eps_points must be >= 10");
  if (g.random_dists < 0) throw std::invalid_argument("random_dists < 0");
  if (g.support_sizes.empty()) throw std::invalid_argument("no support sizes");
  for (int s : g.support_sizes) {
    if (s < 2) throw std::invalid_argument("support sizes must be >= 2");
  }
}

double oracle_tolerance(int eps_points) {
  return eps_points >= 10 * kDefaultEpsPoints ? 1e-5 : 1e-3;
}

std::vector<GridPoint> eps_grid(const Params& p, int points) {
  validate(p);
  if (points < 10) throw std::invalid_argument("eps_grid: points must be >= 10");
  const double s2 = p.sigma * p.sigma;
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(points));
  if (p.w > 0.0) {
    const double top = s2 / p.w;
    const double hi = std::min(top, 1e3);
    const double lo = std::min(1e-6, 1e-3 * hi);
    for (double u : log_space(lo, hi, points)) out.push_back({u, s2 / u});
    if (hi == top) out.back().v = p.w;
  } else {
    const double base = -p.w;
    for (double t : log_space(1e-6, 1e3, points)) {
      const double u = base + t;
      out.push_back({u, s2 / u});
    }
  }
  return out;
}

BruteForceResult brute_force_supremum(const Params& p, const GridSpec& g) {
  validate(g);
  const std::vector<GridPoint> grid = eps_grid(p, g.eps_points);
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const TwoPointDist tp(grid[i].u, grid[i].v);
    if (!validate_extremal(tp, p.w)) continue;
    const double m = tilted_mean(tp.as_discrete(), p.h, p.w);
    if (m > best) {
      best = m;
      best_i = i;
    }
  }
  if (best_i == grid.size()) {
    throw std::runtime_error("brute_force_supremum: empty feasible grid");
  }
  const double origin = std::max(0.0, -p.w);
  const double log_step =
      std::log((grid[1].u - origin) / (grid[0].u - origin));
  return {best, TwoPointDist(grid[best_i].u, grid[best_i].v), best_i, origin,
          log_step};
}

CheckReport random_dist_check(const Params& p, const GridSpec& g,
                              double variance_fraction) {
  validate(g);
  const double s = supremum(p).supremum;
  CheckReport report{"random_dist_check", 0, {}, 0.0};
  for_each_random_dist(p, g, variance_fraction, [&](const DiscreteDist& d) {
    const double m = tilted_mean(d, p.h, p.w);
    ++report.cases;
    report.max_ratio = std::max(report.max_ratio, m / s);
    if (!(m <= s + kSlack)) {
      report.violations.push_back(cell(p) + " tilted_mean=" + num(m) +
                                  " exceeds S=" + num(s));
    }
  });
  return report;
}

double linear_functional(const DiscreteDist& dist, double h, double w,
                         double k) {
  double sum = 0.0;
  for (const Atom& a : dist.atoms()) {
    sum += (a.x - k) * std::exp(h * std::min(a.x, w)) * a.p;
  }
  return sum;
}

LinearSupReport linear_sup_consistency(const Params& p, const GridSpec& g,
                                       double k_offset) {
  validate(g);
  const BoundResult r = supremum(p);
  LinearSupReport report{r.supremum + k_offset,
                         -std::numeric_limits<double>::infinity(), 0.0, 0};
  for (const GridPoint& gp : eps_grid(p, g.eps_points)) {
    const TwoPointDist tp(gp.u, gp.v);
    report.grid_max = std::max(
        report.grid_max, linear_functional(tp.as_discrete(), p.h, p.w, report.k));
    ++report.cases;
  }
  for_each_random_dist(p, g, 0.0, [&](const DiscreteDist& d) {
    report.grid_max =
        std::max(report.grid_max, linear_functional(d, p.h, p.w, report.k));
    ++report.cases;
  });
  report.at_maximizer =
      linear_functional(r.maximizer.as_discrete(), p.h, p.w, report.k);
  report.grid_max = std::max(report.grid_max, report.at_maximizer);
  return report;
}

MonotonicityGrid MonotonicityGrid::standard(std::uint64_t seed) {
  MonotonicityGrid g;
  g.h_values = {0.1, 0.25, 0.5, 1.0, 2.0};
  for (int i = 0; i <= 24; ++i) g.w_values.push_back(-3.0 + 0.25 * i);
  g.dists = 200;
  g.support_sizes = {2, 3, 4};
  g.bound_h_values = {0.2, 0.5, 1.0, 2.0, 5.0};
  g.bound_w_values = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  g.bound_sigma_values = {0.05, 0.2, 0.5, 1.0, 2.0};
  g.seed = seed;
  return g;
}

CheckReport monotonicity_suite(const MonotonicityGrid& grid) {
  CheckReport report{"monotonicity_suite", 0, {}, 0.0};
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  Rng rng(grid.seed);
  for (int i = 0; i < grid.dists; ++i) {
    const int support = grid.support_sizes[static_cast<std::size_t>(i) %
                                           grid.support_sizes.size()];
    const DiscreteDist d = random_zero_mean_dist(rng, support, 1.0, 1.0);
    const double lo = d.support_inf();
    const double hi = d.support_sup();
    const std::string tag = "dist#" + std::to_string(i);

    for (double w : grid.w_values) {
      for (std::size_t j = 0; j + 1 < grid.h_values.size(); ++j) {
        const double h1 = grid.h_values[j], h2 = grid.h_values[j + 1];
        const double a = tilted_mean(d, h1, w), b = tilted_mean(d, h2, w);
        ++report.cases;
        if (b < a) {
          fail(tag + " nondecreasing in h: w=" + num(w) + " h=" + num(h1) +
               "->" + num(h2) + " " + num(a) + " > " + num(b));
        } else if (w > lo && !(b > a)) {
          fail(tag + " strictly increasing in h: w=" + num(w) + " h=" +
               num(h1) + "->" + num(h2) + " value " + num(a));
        }
      }
    }
    for (double h : grid.h_values) {
      for (std::size_t j = 0; j + 1 < grid.w_values.size(); ++j) {
        const double w1 = grid.w_values[j], w2 = grid.w_values[j + 1];
        const double a = tilted_mean(d, h, w1), b = tilted_mean(d, h, w2);
        ++report.cases;
        if (b < a) {
          fail(tag + " nondecreasing in w: h=" + num(h) + " w=" + num(w1) +
               "->" + num(w2) + " " + num(a) + " > " + num(b));
        } else if (w1 >= lo && w2 <= hi && !(b > a)) {
          fail(tag + " strictly increasing in w on support hull: h=" + num(h) +
               " w=" + num(w1) + "->" + num(w2));
        } else if (w1 >= hi && b != a) {
          fail(tag + " constant in w above sup supp: h=" + num(h) + " w=" +
               num(w1) + "->" + num(w2));
        }
      }
    }
  }

  const auto& hs = grid.bound_h_values;
  const auto& ws = grid.bound_w_values;
  const auto& ss = grid.bound_sigma_values;
  auto s_at = [](double h, double w, double sigma) {
    return supremum(Params{h, w, sigma}).supremum;
  };
  auto check_increasing = [&](const std::vector<double>& values,
                              const std::string& label) {
    for (std::size_t j = 0; j + 1 < values.size(); ++j) {
      ++report.cases;
      if (!(values[j + 1] > values[j])) {
        fail("supremum strictly increasing in " + label + " at step " +
             std::to_string(j) + ": " + num(values[j]) + " -> " +
             num(values[j + 1]));
      }
    }
  };
  for (double w : ws) {
    for (double sigma : ss) {
      std::vector<double> v;
      for (double h : hs) v.push_back(s_at(h, w, sigma));
      check_increasing(v, "h (w=" + num(w) + " sigma=" + num(sigma) + ")");
    }
  }
  for (double h : hs) {
    for (double sigma : ss) {
      std::vector<double> v;
      for (double w : ws) v.push_back(s_at(h, w, sigma));
      check_increasing(v, "w (h=" + num(h) + " sigma=" + num(sigma) + ")");
    }
    for (double w : ws) {
      std::vector<double> v;
      for (double sigma : ss) v.push_back(s_at(h, w, sigma));
      check_increasing(v, "sigma (h=" + num(h) + " w=" + num(w) + ")");
    }
  }
  return report;
}

CheckReport corollary_y_check(const Params& p, const GridSpec& g) {
  validate(g);
  const BoundResult r = supremum(p);
  CheckReport report{"corollary_y_check", 0, {}, 0.0};
  const double w = p.w;
  for_each_random_dist(p, g, 0.0, [&](const DiscreteDist& d) {
    const double y_wins =
        tilted_expectation(d, p.h, w, [w](double x) { return std::min(x, w); });
    const double y_trunc =
        tilted_expectation(d, p.h, w, [w](double x) { return x <= w ? x : 0.0; });
    ++report.cases;
    for (const auto& [label, y] :
         {std::pair<const char*, double>{"X^w", y_wins}, {"X1{X<=w}", y_trunc}}) {
      report.max_ratio = std::max(report.max_ratio, y / r.supremum);
      if (!(y <= r.supremum + kSlack)) {
        report.violations.push_back(cell(p) + " Y=" + label + " value " +
                                    num(y) + " exceeds S=" + num(r.supremum));
      }
      if (!(y < r.k_bound)) {
        report.violations.push_back(cell(p) + " Y=" + label + " value " +
                                    num(y) + " not below K sigma^2=" +
                                    num(r.k_bound));
      }
    }
    if (w >= 0.0 && !(y_trunc <= y_wins + 1e-12)) {
      report.violations.push_back(cell(p) + " X1{X<=w} above X^w: " +
                                  num(y_trunc) + " > " + num(y_wins));
    }
  });
  return report;
}

}  // namespace tiltbound
