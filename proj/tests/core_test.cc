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

#include "tiltbound/core.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "frozen_values.h"
#include "tiltbound/sampling.h"

namespace tiltbound {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(DiscreteDist, SortsAndReportsMoments) {
  const DiscreteDist d({{2.0, 0.25}, {-1.0, 0.5}, {0.0, 0.25}});
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d.support_inf(), -1.0);
  EXPECT_EQ(d.support_sup(), 2.0);
  EXPECT_DOUBLE_EQ(d.mean(), 0.0);
  EXPECT_DOUBLE_EQ(d.second_moment(), 1.5);
  EXPECT_DOUBLE_EQ(d.variance(), 1.5);
}

TEST(DiscreteDist, MergesNearDuplicates) {
  const DiscreteDist d({{1.0, 0.3}, {1.0 + 1e-16, 0.2}, {-1.0, 0.5}});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NEAR(d.atoms()[1].p, 0.5, 1e-15);
}

TEST(DiscreteDist, RejectsBadMasses) {
  EXPECT_THROW(DiscreteDist({{0.0, 0.5}, {1.0, 0.4}}), std::invalid_argument);
  EXPECT_THROW(DiscreteDist({{0.0, 1.2}, {1.0, -0.2}}), std::invalid_argument);
  EXPECT_THROW(DiscreteDist({{0.0, 0.0}, {1.0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(DiscreteDist(std::vector<Atom>{}), std::invalid_argument);
  EXPECT_THROW(DiscreteDist({{std::nan(""), 1.0}}), std::invalid_argument);
}

TEST(DiscreteDist, ShiftAndScale) {
  const DiscreteDist d({{-1.0, 0.5}, {1.0, 0.5}});
  EXPECT_DOUBLE_EQ(d.shifted(3.0).mean(), 3.0);
  EXPECT_DOUBLE_EQ(d.scaled(-2.0).variance(), 4.0);
  EXPECT_EQ(d.scaled(-2.0).support_inf(), -2.0);
}

TEST(TwoPointDist, MassesAndVariance) {
  const TwoPointDist tp(0.5, 2.0);
  EXPECT_DOUBLE_EQ(tp.mass_left(), 0.8);
  EXPECT_DOUBLE_EQ(tp.mass_right(), 0.2);
  EXPECT_DOUBLE_EQ(tp.variance(), 1.0);
  EXPECT_NEAR(tp.as_discrete().mean(), 0.0, 1e-16);
  EXPECT_THROW(TwoPointDist(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(TwoPointDist(1.0, kInf), std::invalid_argument);
}

TEST(Params, Validation) {
  EXPECT_NO_THROW(validate(Params{1.0, -3.0, 0.1}));
  EXPECT_THROW(validate(Params{0.0, 1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(validate(Params{1.0, 1.0, -1.0}), std::invalid_argument);
  EXPECT_THROW(validate(Params{1.0, kInf, 1.0}), std::invalid_argument);
}

TEST(TiltedMean, PointMassIsItsAtom) {
  EXPECT_DOUBLE_EQ(tilted_mean(DiscreteDist::point_mass(0.0), 1.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(tilted_mean(DiscreteDist::point_mass(2.5), 3.0, -1.0), 2.5);
}

TEST(TiltedMean, SymmetricCoinAtUnitTilt) {
  const DiscreteDist d({{-1.0, 0.5}, {1.0, 0.5}});
  EXPECT_NEAR(tilted_mean(d, 1.0, kInf), std::tanh(1.0), 1e-15);
  // Winsorizing at 0 leaves only the left atom tilted down.
  const double expected = (std::exp(-1.0) * -1.0 + 1.0) / (std::exp(-1.0) + 1.0);
  EXPECT_NEAR(tilted_mean(d, 1.0, 0.0), expected, 1e-15);
}

TEST(TiltedMean, TwoPointClosedFormMatchesOracle) {
  const TwoPointDist tp(0.5, 2.0);
  EXPECT_LE(rel_err(two_point_mean(tp, 2.0, 1.0), testing::kTwoPointU0p5V2H2W1),
            1e-14);
  EXPECT_LE(rel_err(tilted_mean(tp.as_discrete(), 2.0, 1.0),
                    testing::kTwoPointU0p5V2H2W1),
            1e-14);
}

TEST(TiltedMean, NoOverflowForHugeTilt) {
  const DiscreteDist d({{-1.0, 0.5}, {1.0, 0.5}});
  const double m = tilted_mean(d, 1e4, kInf);
  EXPECT_TRUE(std::isfinite(m));
  EXPECT_NEAR(m, 1.0, 1e-15);
}

TEST(TiltedMean, RequiresPositiveTilt) {
  const DiscreteDist d({{-1.0, 0.5}, {1.0, 0.5}});
  EXPECT_THROW(tilted_mean(d, 0.0, 1.0), std::invalid_argument);
}

TEST(TiltedMean, TwoPointFormulaAgreesWithGenericEvaluator) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lu(-3.0, 1.0);
  std::uniform_real_distribution<double> lh(-2.0, 1.0);
  std::uniform_real_distribution<double> uw(-4.0, 4.0);
  for (int i = 0; i < 5000; ++i) {
    const double u = std::pow(10.0, lu(rng));
    const double v = std::pow(10.0, lu(rng));
    const double h = std::pow(10.0, lh(rng));
    const double w = uw(rng);
    const TwoPointDist tp(u, v);
    const double a = two_point_mean(tp, h, w);
    const double b = tilted_mean(tp.as_discrete(), h, w);
    // The generic form loses accuracy to cancellation in the sum itself.
    EXPECT_NEAR(a, b, 1e-13 * std::max(u, v)) << "u=" << u << " v=" << v;
  }
}

TEST(TiltedMean, BoundedByLargestAtom) {
  Rng rng(11);
  std::uniform_real_distribution<double> uh(0.01, 5.0);
  std::uniform_real_distribution<double> uw(-3.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const DiscreteDist d = random_zero_mean_dist(rng, 2 + i % 4, 1.0, 1.0);
    double bound = 0.0;
    for (const Atom& a : d.atoms()) bound = std::max(bound, std::abs(a.x));
    const double m = tilted_mean(d, uh(rng), uw(rng));
    EXPECT_LE(std::abs(m), bound * (1.0 + 1e-14));
    EXPECT_GE(m, d.support_inf() - 1e-14);
    EXPECT_LE(m, d.support_sup() + 1e-14);
  }
}

TEST(TiltedMean, ShiftIdentity) {
  Rng rng(12);
  std::uniform_real_distribution<double> um(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const DiscreteDist d = random_zero_mean_dist(rng, 3, 1.0, 1.0);
    const double m = um(rng);
    const double h = 0.7;
    const double w = 0.4;
    EXPECT_NEAR(tilted_mean(d.shifted(m), h, w), m + tilted_mean(d, h, w - m),
                1e-12);
  }
}

TEST(TiltedMean, RescaleIdentity) {
  Rng rng(13);
  std::uniform_real_distribution<double> uc(0.1, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const DiscreteDist d = random_zero_mean_dist(rng, 4, 1.0, 1.0);
    const double c = uc(rng);
    const double h = 0.9;
    const double w = -0.3;
    EXPECT_NEAR(tilted_mean(d.scaled(c), h, w), c * tilted_mean(d, c * h, w / c),
                1e-12 * c);
  }
}

TEST(TiltedMean, PermutationInvariant) {
  Rng rng(14);
  for (int i = 0; i < 500; ++i) {
    const DiscreteDist d = random_zero_mean_dist(rng, 4, 1.0, 1.0);
    std::vector<Atom> atoms(d.atoms().begin(), d.atoms().end());
    std::shuffle(atoms.begin(), atoms.end(), rng);
    const DiscreteDist e(atoms);
    EXPECT_EQ(tilted_mean(d, 1.3, 0.2), tilted_mean(e, 1.3, 0.2));
  }
}

TEST(TiltedMean, NondecreasingInTiltAndLevel) {
  Rng rng(15);
  for (int i = 0; i < 500; ++i) {
    const DiscreteDist d = random_zero_mean_dist(rng, 3, 1.0, 1.0);
    for (double w = -3.0; w <= 3.0; w += 0.5) {
      EXPECT_LE(tilted_mean(d, 0.5, w), tilted_mean(d, 1.0, w) + 1e-15);
      EXPECT_LE(tilted_mean(d, 1.0, w), tilted_mean(d, 1.0, w + 0.5) + 1e-15);
    }
  }
}

TEST(Extremal, FeasibilityWindow) {
  EXPECT_TRUE(validate_extremal(TwoPointDist(1.0, 1.0), 1.0));
  EXPECT_FALSE(validate_extremal(TwoPointDist(1.0, 0.5), 1.0));
  EXPECT_FALSE(validate_extremal(TwoPointDist(1.0, 2.0), -1.0));
  EXPECT_TRUE(validate_extremal(TwoPointDist(1.5, 2.0), -1.0));
}

TEST(Sampling, ZeroMeanWithRequestedVariance) {
  Rng rng(16);
  for (int i = 0; i < 1000; ++i) {
    const int support = 2 + i % 3;
    const DiscreteDist d = random_zero_mean_dist(rng, support, 0.3, 0.05);
    EXPECT_EQ(d.size(), static_cast<std::size_t>(support));
    EXPECT_NEAR(d.mean(), 0.0, 1e-13);
    EXPECT_NEAR(d.variance(), 0.05, 1e-14);
  }
}

TEST(Sampling, Deterministic) {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 50; ++i) {
    const DiscreteDist x = random_zero_mean_dist(a, 3, 1.0, 1.0);
    const DiscreteDist y = random_zero_mean_dist(b, 3, 1.0, 1.0);
    for (std::size_t j = 0; j < x.size(); ++j) {
      EXPECT_EQ(x.atoms()[j].x, y.atoms()[j].x);
      EXPECT_EQ(x.atoms()[j].p, y.atoms()[j].p);
    }
  }
}

}  // namespace
}  // namespace tiltbound
