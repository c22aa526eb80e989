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

#ifndef TILTBOUND_SAMPLING_H_
#define TILTBOUND_SAMPLING_H_

#include <random>

#include "tiltbound/core.h"

namespace tiltbound {

using Rng = std::mt19937_64;

// Random zero-mean law on `support` points with the given variance. Atoms
// are drawn uniformly from [-5 sigma, 5 sigma], masses uniformly from the
// simplex; the atoms are then shifted to mean zero and rescaled to the target
// variance. Degenerate draws are rejected. Requires support >= 2 and
// variance > 0.
DiscreteDist random_zero_mean_dist(Rng& rng, int support, double sigma,
                                   double variance);

}  // namespace tiltbound

#endif  // TILTBOUND_SAMPLING_H_
