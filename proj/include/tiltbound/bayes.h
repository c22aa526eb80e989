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

// Prior-free bounds on the Bayes posterior mean in a one-parameter
// exponential family p(x | theta) = e^{theta T(x)} c(theta) q(x).
//
// With the prior normalized so that c(theta) pi(d theta) is a probability
// measure with mean m, variance at most sigma^2, and support below
// theta_max, the posterior mean given t = T(x) satisfies
//
//   theta_hat - m <= S_{t, theta_max - m, sigma}
//                 <  (e^{(theta_max - m) t} - 1) / (theta_max - m) sigma^2.
//
// Computing t from data is the caller's job.

#ifndef TILTBOUND_BAYES_H_
#define TILTBOUND_BAYES_H_

#include <optional>

#include "tiltbound/bounds.h"
#include "tiltbound/core.h"
#include "tiltbound/sampling.h"

namespace tiltbound {

struct BayesFamily {
  double theta_max;
  double prior_mean;
  double prior_sd;
};

// Throws std::invalid_argument unless all fields are finite, prior_sd > 0 and
// prior_mean < theta_max.
void validate(const BayesFamily& fam);

// c(theta) pi(d theta) as a discrete law with support at most theta_max.
class DiscretePrior {
 public:
  // Throws std::invalid_argument when an atom exceeds theta_max (beyond a
  // relative rounding slack of 1e-12).
  DiscretePrior(DiscreteDist dist, double theta_max);

  const DiscreteDist& dist() const { return dist_; }
  double theta_max() const { return theta_max_; }

 private:
  DiscreteDist dist_;
  double theta_max_;
};

// Integral of theta e^{theta t} over integral of e^{theta t} under the prior.
// Any real t is accepted; the bounds below need t > 0.
double posterior_mean(const DiscretePrior& prior, double t);

struct PosteriorBound {
  // m + S_{t, theta_max - m, sigma}.
  double exact;
  // m + (e^{(theta_max - m) t} - 1) / (theta_max - m) sigma^2.
  double simple;
  // theta_max.
  double trivial;
  // The zero-mean problem behind `exact`.
  BoundResult zero_mean;
  // True when the extremal law puts its upper atom at theta_max, so that it
  // is itself an admissible prior and `exact` is attained.
  bool attainable;
};

// Throws std::domain_error for t <= 0.
PosteriorBound posterior_mean_bound(const BayesFamily& fam, double t);

// The shifted extremal law when it is an admissible prior.
std::optional<DiscretePrior> extremal_prior(const BayesFamily& fam, double t);

// A random admissible prior: a random zero-mean law with variance in
// (0, sigma^2], shrunk if needed so its top atom stays at or below
// theta_max - m, then shifted by m.
DiscretePrior random_prior(Rng& rng, const BayesFamily& fam, int support);

}  // namespace tiltbound

#endif  // TILTBOUND_BAYES_H_
