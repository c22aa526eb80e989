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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "frozen_values.h"

namespace tiltbound {
namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(UStar, FrozenValues) {
  EXPECT_LE(rel_err(u_star(1.0, 1.0), testing::kUStarH1E1), 1e-14);
  EXPECT_LE(rel_err(u_star(1e-8, 1.0), testing::kUStarH1em8E1), 1e-12);
}

TEST(UStar, SmallTiltLimitIsOneThird) {
  EXPECT_NEAR(u_star(1e-12, 1.0), 1.0 / 3.0, 1e-10);
}

TEST(UStar, IncreasingInEps) {
  for (double h : {0.05, 0.5, 1.0, 5.0, 50.0}) {
    double prev = 0.0;
    for (double e = 1e-6; e < 100.0; e *= 1.3) {
      const double u = u_star(h, e);
      if (std::isinf(u)) break;
      EXPECT_GT(u, prev) << "h=" << h << " eps=" << e;
      prev = u;
    }
  }
}

TEST(UStar, OverflowsToInfinity) {
  EXPECT_EQ(u_star(500.0, 10.0), std::numeric_limits<double>::infinity());
  EXPECT_TRUE(std::isfinite(u_star(300.0, 1.0)));
}

TEST(SigmaH, FrozenValues) {
  EXPECT_LE(rel_err(sigma_h(0.2), testing::kSigmaH0p2), 1e-12);
  EXPECT_LE(rel_err(sigma_h(1.0), testing::kSigmaH1), 1e-12);
  EXPECT_LE(rel_err(sigma_h(5.0), testing::kSigmaH5), 1e-12);
}

TEST(SigmaH, SignRelation) {
  for (double h : {0.1, 1.0, 3.0, 20.0}) {
    const double s = sigma_h(h);
    const double s2 = s * s;
    EXPECT_LT(u_star(h, 0.9 * s2), 0.9 * s2);
    EXPECT_GT(u_star(h, 1.1 * s2), 1.1 * s2);
  }
}

TEST(SigmaH, DecreasingInTilt) {
  double prev = std::numeric_limits<double>::infinity();
  for (double h = 0.05; h < 100.0; h *= 1.5) {
    const double s = sigma_h(h);
    EXPECT_LT(s, prev);
    prev = s;
  }
}

TEST(EpsTilde, FrozenValue) {
  EXPECT_LE(rel_err(eps_tilde(1.0, 2.0 * testing::kSigmaH1),
                    testing::kEpsTildeH1TwoSigma),
            1e-12);
}

TEST(EpsTilde, DomainError) {
  const double s = sigma_h(1.0);
  EXPECT_THROW(eps_tilde(1.0, 0.9 * s), std::domain_error);
  const double e = eps_tilde(1.0, 1.1 * s);
  EXPECT_GT(e, 0.0);
  EXPECT_LT(e, 1.21 * s * s);
}

TEST(EpsTilde, ApproachesSaturationAtThreshold) {
  const double s = sigma_h(1.0);
  EXPECT_LE(rel_err(eps_tilde(1.0, s * (1.0 + 1e-6)), s * s), 1e-3);
}

TEST(EpsNonposW, FrozenValues) {
  EXPECT_LE(rel_err(eps_opt_nonpos_w(1.0, CanonicalW::kZero, 1.0),
                    testing::kEpsW0H1S1),
            1e-12);
  EXPECT_LE(rel_err(eps_opt_nonpos_w(1.0, CanonicalW::kMinusOne, 1.0),
                    testing::kEpsWm1H1S1),
            1e-12);
  EXPECT_THROW(eps_opt_nonpos_w(1.0, CanonicalW::kPlusOne, 1.0),
               std::invalid_argument);
}

TEST(EpsNonposW, SignChangeAtRoot) {
  for (CanonicalW w : {CanonicalW::kZero, CanonicalW::kMinusOne}) {
    const double e = eps_opt_nonpos_w(2.0, w, 0.5);
    EXPECT_GT(r_w1(2.0, w, 0.5, e * (1.0 - 1e-6)), 0.0);
    EXPECT_LT(r_w1(2.0, w, 0.5, e * (1.0 + 1e-6)), 0.0);
  }
}

TEST(EpsNonposW, NormalizedMatchesRaw) {
  for (double e : {0.1, 0.7, 1.5, 3.0}) {
    const double h = 0.8;
    const double s = 0.6;
    const double x = e * h;
    const double scale = std::exp(x) * (1.0 + e * h) * (e * e + s * s);
    EXPECT_NEAR(r_w1(h, CanonicalW::kZero, s, e) / scale,
                r_w1_normalized(h, CanonicalW::kZero, s, e), 1e-13);
  }
}

TEST(LambertWm1, FrozenValue) {
  EXPECT_LE(rel_err(lambert_w_m1(-0.1), testing::kLambertM1Minus0p1), 1e-14);
}

TEST(LambertWm1, BranchPointAndDomain) {
  EXPECT_EQ(lambert_w_m1(-std::exp(-1.0)), -1.0);
  EXPECT_THROW(lambert_w_m1(-0.5), std::domain_error);
  EXPECT_THROW(lambert_w_m1(0.0), std::domain_error);
  EXPECT_THROW(lambert_w_m1(0.1), std::domain_error);
  EXPECT_THROW(lambert_w_m1(std::nan("")), std::domain_error);
}

TEST(LambertWm1, RoundTripLogSpaced) {
  const double lo = std::log(1e-300);
  const double hi = -1.0;
  const int n = 10000;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = -std::exp(lo + (hi - lo) * i / (n - 1));
    const double u = lambert_w_m1(z);
    ASSERT_LE(u, -1.0);
    const long double back = static_cast<long double>(u) * std::exp(static_cast<long double>(u));
    worst = std::max(worst, static_cast<double>(std::abs((back - z) / z)));
  }
  EXPECT_LE(worst, 1e-13);
}

TEST(LambertWm1, ExpFormAgreesAndExtends) {
  for (double a : {1.5, 10.0, 100.0, 650.0}) {
    EXPECT_LE(rel_err(lambert_w_m1_exp(a), lambert_w_m1(-std::exp(-a))), 1e-14);
  }
  // -e^{-2000} underflows; u + log(-u) + a = 0 holds instead.
  const double u = lambert_w_m1_exp(2000.0);
  EXPECT_NEAR(u + std::log(-u) + 2000.0, 0.0, 1e-12);
}

TEST(RootConfig, Validation) {
  EXPECT_THROW(validate(RootConfig{0.0, 1e-14, 10}), std::invalid_argument);
  EXPECT_THROW(validate(RootConfig{1e-12, 1e-14, 0}), std::invalid_argument);
}

TEST(Roots, RandomizedResiduals) {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> lh(-2.0, 2.0);
  std::uniform_real_distribution<double> ls(-2.0, 0.5);
  for (int i = 0; i < 300; ++i) {
    const double h = std::pow(10.0, lh(rng));
    const double sigma = std::pow(10.0, ls(rng));
    const double s = sigma_h(h);
    EXPECT_LE(std::abs(u_star(h, s * s) / (s * s) - 1.0), 1e-12);
    const double big = std::max(sigma, 1.01 * s);
    const double e = eps_tilde(h, big);
    EXPECT_LE(std::abs(u_star(h, e) / (big * big) - 1.0), 1e-12);
    for (CanonicalW w : {CanonicalW::kZero, CanonicalW::kMinusOne}) {
      const double r = eps_opt_nonpos_w(h, w, sigma);
      EXPECT_LE(std::abs(r_w1_normalized(h, w, sigma, r)), 1e-12)
          << "h=" << h << " sigma=" << sigma;
    }
  }
}

TEST(Roots, Deterministic) {
  EXPECT_EQ(sigma_h(0.37), sigma_h(0.37));
  EXPECT_EQ(eps_opt_nonpos_w(0.37, CanonicalW::kMinusOne, 0.2),
            eps_opt_nonpos_w(0.37, CanonicalW::kMinusOne, 0.2));
}

}  // namespace
}  // namespace tiltbound
