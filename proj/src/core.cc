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

#include <string>

namespace tiltbound {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

DiscreteDist::DiscreteDist(std::vector<Atom> atoms) {
  require(!atoms.empty(), "DiscreteDist: no atoms");
  double total = 0.0;
  for (const Atom& a : atoms) {
    require(std::isfinite(a.x), "DiscreteDist: atom location is not finite");
    require(std::isfinite(a.p) && a.p > 0.0,
            "DiscreteDist: masses must be positive and finite");
    total += a.p;
  }
  require(std::abs(total - 1.0) <= kMassTolerance,
          "DiscreteDist: masses do not sum to 1");

  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.x < b.x; });
  atoms_.reserve(atoms.size());
  for (const Atom& a : atoms) {
    if (!atoms_.empty()) {
      Atom& last = atoms_.back();
      if (a.x - last.x <= kMergeTolerance * std::max(1.0, std::abs(last.x))) {
        const double p = last.p + a.p;
        last.x = (last.x * last.p + a.x * a.p) / p;
        last.p = p;
        continue;
      }
    }
    atoms_.push_back(a);
  }
}

DiscreteDist DiscreteDist::point_mass(double x) {
  return DiscreteDist({{x, 1.0}});
}

double DiscreteDist::mean() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.x * a.p;
  return s;
}

double DiscreteDist::second_moment() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.x * a.x * a.p;
  return s;
}

double DiscreteDist::variance() const {
  const double m = mean();
  double s = 0.0;
  for (const Atom& a : atoms_) s += (a.x - m) * (a.x - m) * a.p;
  return s;
}

DiscreteDist DiscreteDist::shifted(double m) const {
  std::vector<Atom> out(atoms_.begin(), atoms_.end());
  for (Atom& a : out) a.x += m;
  return DiscreteDist(std::move(out));
}

DiscreteDist DiscreteDist::scaled(double c) const {
  require(c != 0.0 && std::isfinite(c), "DiscreteDist: scale must be nonzero");
  std::vector<Atom> out(atoms_.begin(), atoms_.end());
  for (Atom& a : out) a.x *= c;
  return DiscreteDist(std::move(out));
}

TwoPointDist::TwoPointDist(double u, double v) : u_(u), v_(v) {
  require(std::isfinite(u) && u > 0.0, "TwoPointDist: u must be positive");
  require(std::isfinite(v) && v > 0.0, "TwoPointDist: v must be positive");
}

DiscreteDist TwoPointDist::as_discrete() const {
  return DiscreteDist({{-u_, mass_left()}, {v_, mass_right()}});
}

TwoPointDist TwoPointDist::scaled(double c) const {
  require(c > 0.0, "TwoPointDist: scale must be positive");
  return TwoPointDist(u_ * c, v_ * c);
}

void validate(const Params& p) {
  require(std::isfinite(p.h) && p.h > 0.0, "h must be positive and finite");
  require(std::isfinite(p.w), "w must be finite");
  require(std::isfinite(p.sigma) && p.sigma > 0.0,
          "sigma must be positive and finite");
}

double tilted_mean(const DiscreteDist& dist, double h, double w) {
  require(h > 0.0, "tilted_mean: h must be positive");
  return tilted_expectation(dist, h, w, [](double x) { return x; });
}

double two_point_mean(const TwoPointDist& tp, double h, double w) {
  require(h > 0.0, "two_point_mean: h must be positive");
  const double u = tp.u();
  const double v = tp.v();
  // -u < v, so a <= b and e^{a-b} <= 1.
  const double gap = h * (std::min(-u, w) - std::min(v, w));
  return u * v * -std::expm1(gap) / (v * std::exp(gap) + u);
}

bool validate_extremal(const TwoPointDist& tp, double w) {
  return -tp.u() < w && w <= tp.v();
}

}  // namespace tiltbound
