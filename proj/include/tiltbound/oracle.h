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

// Brute-force verification of the closed-form suprema.
//
// Nothing in this module calls the root finders except to obtain the value
// being checked: the grid search maximizes the tilted mean directly over the
// two-point family, and the random checks evaluate arbitrary discrete laws
// with the generic evaluator from core. Every check collects all violations
// instead of stopping at the first.

#ifndef TILTBOUND_ORACLE_H_
#define TILTBOUND_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tiltbound/bounds.h"
#include "tiltbound/core.h"

namespace tiltbound {

inline constexpr int kDefaultEpsPoints = 2000;

struct GridSpec {
  int eps_points = kDefaultEpsPoints;
  int random_dists = 500;
  std::vector<int> support_sizes{2, 3, 4};
  std::uint64_t seed = 20260117;
};

void validate(const GridSpec& g);

// Relative oracle tolerance for a grid: 1e-3 at the default density and 1e-5
// from ten times the default density on.
double oracle_tolerance(int eps_points);

// A feasible member of the two-point family: -u < w <= v and u v = sigma^2.
struct GridPoint {
  double u;
  double v;
};

// Log-spaced feasible points. For w > 0, u runs over
// [min(1e-6, 1e-3 sigma^2/w), sigma^2/w] and the right end point is the
// variance-saturated law with v = w exactly; for w <= 0, u = |w| + t with t
// log-spaced over [1e-6, 1e3].
std::vector<GridPoint> eps_grid(const Params& p, int points);

struct BruteForceResult {
  double value;
  TwoPointDist argmax;
  // Index of the argmax in eps_grid(p, g.eps_points).
  std::size_t argmax_index;
  // The grid is log-spaced in u - origin with this spacing.
  double origin;
  double log_step;
};

BruteForceResult brute_force_supremum(const Params& p, const GridSpec& g);

struct CheckReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> violations;
  // Largest value / supremum observed (0 when not applicable).
  double max_ratio = 0.0;

  bool ok() const { return violations.empty(); }
};

// Tilted means of g.random_dists random zero-mean laws never exceed the
// supremum by more than 1e-9. With variance_fraction in (0, 1] every law has
// variance variance_fraction * sigma^2; with 0, even-numbered laws saturate
// the variance and odd-numbered ones draw it uniformly from (0, sigma^2].
CheckReport random_dist_check(const Params& p, const GridSpec& g,
                              double variance_fraction = 0.0);

// E[(X - k) e^{h (X ^ w)}].
double linear_functional(const DiscreteDist& dist, double h, double w,
                         double k);

struct LinearSupReport {
  double k;
  // Largest linear functional over the two-point grid and random laws.
  double grid_max;
  // The linear functional at the closed-form maximizer.
  double at_maximizer;
  std::size_t cases;
};

// With k = S + k_offset, the linear functional is <= 0 on every admissible law
// and vanishes at the maximizer when k_offset = 0.
LinearSupReport linear_sup_consistency(const Params& p, const GridSpec& g,
                                       double k_offset = 0.0);

struct MonotonicityGrid {
  // Distribution-level checks.
  std::vector<double> h_values;
  std::vector<double> w_values;
  int dists = 0;
  std::vector<int> support_sizes;
  // Supremum-level checks.
  std::vector<double> bound_h_values;
  std::vector<double> bound_w_values;
  std::vector<double> bound_sigma_values;
  std::uint64_t seed = 0;

  static MonotonicityGrid standard(std::uint64_t seed = 20260117);
};

// For random laws X: E_{h,w} X nondecreasing in h and w; strictly increasing
// in h when w > inf supp X; strictly increasing in w on [inf supp, sup supp];
// constant in w above sup supp. For the supremum: strictly increasing in h, w
// and sigma. Strict checks require a positive difference.
CheckReport monotonicity_suite(const MonotonicityGrid& grid);

// E[Y e^{h (X ^ w)}] / E[e^{h (X ^ w)}] <= S and < K sigma^2 for
// Y = X ^ w and Y = X 1{X <= w}; the second never exceeds the first for
// w >= 0.
CheckReport corollary_y_check(const Params& p, const GridSpec& g);

}  // namespace tiltbound

#endif  // TILTBOUND_ORACLE_H_
