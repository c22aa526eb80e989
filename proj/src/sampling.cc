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

#include "tiltbound/sampling.h"

#include <cmath>
#include <vector>

namespace tiltbound {

DiscreteDist random_zero_mean_dist(Rng& rng, int support, double sigma,
                                   double variance) {
  if (support < 2 || !(sigma > 0.0) || !(variance > 0.0)) {
    throw std::invalid_argument("random_zero_mean_dist: bad arguments");
  }
  std::uniform_real_distribution<double> location(-5.0 * sigma, 5.0 * sigma);
  std::exponential_distribution<double> gamma1(1.0);

  std::vector<Atom> atoms(static_cast<std::size_t>(support));
  for (;;) {
    double total = 0.0;
    for (Atom& a : atoms) {
      a.x = location(rng);
      a.p = gamma1(rng);
      total += a.p;
    }
    double mean = 0.0;
    for (Atom& a : atoms) {
      a.p /= total;
      mean += a.x * a.p;
    }
    double var = 0.0;
    for (const Atom& a : atoms) var += (a.x - mean) * (a.x - mean) * a.p;
    if (!(var > 1e-10 * sigma * sigma)) continue;

    bool too_light = false;
    for (const Atom& a : atoms) too_light |= a.p < 1e-12;
    if (too_light) continue;

    const double scale = std::sqrt(variance / var);
    for (Atom& a : atoms) a.x = (a.x - mean) * scale;
    DiscreteDist dist(atoms);
    if (dist.size() == atoms.size()) return dist;
  }
}

}  // namespace tiltbound
