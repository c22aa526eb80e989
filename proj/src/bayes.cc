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

#include "tiltbound/bayes.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace tiltbound {

void validate(const BayesFamily& fam) {
  if (!std::isfinite(fam.theta_max) || !std::isfinite(fam.prior_mean)) {
    throw std::invalid_argument("BayesFamily: theta_max and mean must be finite");
  }
  if (!(std::isfinite(fam.prior_sd) && fam.prior_sd > 0.0)) {
    throw std::invalid_argument("BayesFamily: prior_sd must be positive");
  }
  if (!(fam.prior_mean < fam.theta_max)) {
    throw std::invalid_argument("BayesFamily: prior_mean must be < theta_max");
  }
}

DiscretePrior::DiscretePrior(DiscreteDist dist, double theta_max)
    : dist_(std::move(dist)), theta_max_(theta_max) {
  const double slack = 1e-12 * std::max(1.0, std::abs(theta_max));
  if (!(dist_.support_sup() <= theta_max + slack)) {
    throw std::invalid_argument("DiscretePrior: atom above theta_max");
  }
}

double posterior_mean(const DiscretePrior& prior, double t) {
  return tilted_expectation(prior.dist(), t,
                            std::numeric_limits<double>::infinity(),
                            [](double theta) { return theta; });
}

PosteriorBound posterior_mean_bound(const BayesFamily& fam, double t) {
  validate(fam);
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error("posterior_mean_bound: t must be positive");
  }
  const double m = fam.prior_mean;
  const double w = fam.theta_max - m;
  const double s2 = fam.prior_sd * fam.prior_sd;
  BoundResult r = supremum(Params{t, shift_reduce(t, fam.theta_max, m), fam.prior_sd});
  const bool attainable = r.branch == Branch::kSaturatedVariance;
  return {m + r.supremum, m + std::expm1(w * t) / w * s2, fam.theta_max,
          std::move(r), attainable};
}

std::optional<DiscretePrior> extremal_prior(const BayesFamily& fam, double t) {
  const PosteriorBound b = posterior_mean_bound(fam, t);
  if (!b.attainable) return std::nullopt;
  const TwoPointDist& tp = b.zero_mean.maximizer;
  const double m = fam.prior_mean;
  // The saturated maximizer's upper atom is w = theta_max - m; place it at
  // theta_max directly rather than at m + (theta_max - m).
  return DiscretePrior(
      DiscreteDist({{m - tp.u(), tp.mass_left()}, {fam.theta_max, tp.mass_right()}}),
      fam.theta_max);
}

DiscretePrior random_prior(Rng& rng, const BayesFamily& fam, int support) {
  validate(fam);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double s2 = fam.prior_sd * fam.prior_sd;
  const double var = s2 * (1.0 - unit(rng));
  DiscreteDist x = random_zero_mean_dist(rng, support, fam.prior_sd, var);
  const double room = fam.theta_max - fam.prior_mean;
  if (x.support_sup() > room) x = x.scaled(room / x.support_sup());
  return DiscretePrior(x.shifted(fam.prior_mean), fam.theta_max);
}

}  // namespace tiltbound
