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

#include "tiltbound/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tiltbound/bayes.h"
#include "tiltbound/bounds.h"

namespace tiltbound::cli {

namespace {

std::string g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string cell_name(double h, double w, double sigma) {
  return "h=" + g12(h) + " w=" + g12(w) + " sigma=" + g12(sigma);
}

void check_positive_list(const std::vector<double>& xs, const char* what) {
  for (double x : xs) {
    if (!(std::isfinite(x) && x > 0.0)) {
      throw std::invalid_argument(std::string("SweepSpec: ") + what +
                                  " values must be positive and finite");
    }
  }
}

}  // namespace

SweepSpec SweepSpec::figure() {
  SweepSpec s;
  s.h_values = {0.2, 1.0, 5.0};
  s.w_values = {-1.0, 0.0, 1.0};
  s.sigma_lo = 0.005;
  s.sigma_hi = 1.0;
  s.sigma_n = 200;
  s.spacing = Spacing::kLinear;
  return s;
}

SweepSpec SweepSpec::verification() {
  SweepSpec s = figure();
  s.sigma_values = {0.05, 0.2, 0.5, 1.0, 2.0};
  return s;
}

std::vector<double> SweepSpec::sigmas() const {
  std::vector<double> out;
  if (!sigma_values.empty()) {
    out = sigma_values;
  } else {
    out.resize(static_cast<std::size_t>(sigma_n));
    for (int i = 0; i < sigma_n; ++i) {
      const double f = static_cast<double>(i) / (sigma_n - 1);
      out[static_cast<std::size_t>(i)] =
          spacing == Spacing::kLinear
              ? sigma_lo + (sigma_hi - sigma_lo) * f
              : std::exp(std::log(sigma_lo) +
                         (std::log(sigma_hi) - std::log(sigma_lo)) * f);
    }
    out.front() = sigma_lo;
    out.back() = sigma_hi;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate(const SweepSpec& spec) {
  if (spec.h_values.empty()) throw std::invalid_argument("SweepSpec: no h values");
  if (spec.w_values.empty()) throw std::invalid_argument("SweepSpec: no w values");
  check_positive_list(spec.h_values, "h");
  for (double w : spec.w_values) {
    if (!std::isfinite(w)) throw std::invalid_argument("SweepSpec: w must be finite");
  }
  if (!spec.sigma_values.empty()) {
    check_positive_list(spec.sigma_values, "sigma");
    return;
  }
  if (!(std::isfinite(spec.sigma_lo) && spec.sigma_lo > 0.0)) {
    throw std::invalid_argument("SweepSpec: sigma_lo must be positive");
  }
  if (!(std::isfinite(spec.sigma_hi) && spec.sigma_hi >= spec.sigma_lo)) {
    throw std::invalid_argument("SweepSpec: sigma_hi must be >= sigma_lo");
  }
  if (spec.sigma_n < 2) throw std::invalid_argument("SweepSpec: sigma_n must be >= 2");
}

std::vector<RatioRow> ratio_curve(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> ws = spec.w_values;
  std::vector<double> hs = spec.h_values;
  std::sort(ws.begin(), ws.end());
  std::sort(hs.begin(), hs.end());
  const std::vector<double> sigmas = spec.sigmas();
  std::vector<RatioRow> rows;
  rows.reserve(ws.size() * hs.size() * sigmas.size());
  for (double w : ws) {
    for (double h : hs) {
      for (double s : sigmas) {
        const BoundResult r = supremum(Params{h, w, s});
        rows.push_back({w, h, s, r.supremum, r.k_factor, r.ratio()});
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<RatioRow>& rows) {
  out << "w,h,sigma,S,K,ratio\n";
  for (const RatioRow& r : rows) {
    out << g12(r.w) << ',' << g12(r.h) << ',' << g12(r.sigma) << ','
        << g12(r.S) << ',' << g12(r.K) << ',' << g12(r.ratio) << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<RatioRow>& rows) {
  // Values pass through the 12-digit text form so both outputs agree.
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const RatioRow& r : rows) {
    nlohmann::ordered_json o;
    o["w"] = std::stod(g12(r.w));
    o["h"] = std::stod(g12(r.h));
    o["sigma"] = std::stod(g12(r.sigma));
    o["S"] = std::stod(g12(r.S));
    o["K"] = std::stod(g12(r.K));
    o["ratio"] = std::stod(g12(r.ratio));
    arr.push_back(std::move(o));
  }
  out << arr.dump(2) << '\n';
}

std::vector<std::string> ratio_monotonicity_warnings(
    const std::vector<RatioRow>& rows) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const RatioRow& a = rows[i - 1];
    const RatioRow& b = rows[i];
    if (a.w != b.w || a.h != b.h) continue;
    if (b.ratio > a.ratio) {
      out.push_back("ratio increases in sigma at w=" + g12(b.w) + " h=" +
                    g12(b.h) + " sigma=" + g12(a.sigma) + "->" + g12(b.sigma) +
                    " (" + g17(a.ratio) + " -> " + g17(b.ratio) + ")");
    }
  }
  return out;
}

int cmd_bound(const Params& p, Format format, std::ostream& out,
              std::ostream& err) {
  BoundResult r{0.0, TwoPointDist(1.0, 1.0), 0.0, 0.0, Branch::kNonposW};
  try {
    r = supremum(p);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  const TwoPointDist& m = r.maximizer;
  const std::string branch(to_string(r.branch));
  switch (format) {
    case Format::kText:
      out << "h          " << g12(p.h) << '\n'
          << "w          " << g12(p.w) << '\n'
          << "sigma      " << g12(p.sigma) << '\n'
          << "supremum   " << g12(r.supremum) << '\n'
          << "u          " << g12(m.u()) << '\n'
          << "v          " << g12(m.v()) << '\n'
          << "mass_u     " << g12(m.mass_left()) << '\n'
          << "mass_v     " << g12(m.mass_right()) << '\n'
          << "branch     " << branch << '\n'
          << "k_factor   " << g12(r.k_factor) << '\n'
          << "k_bound    " << g12(r.k_bound) << '\n'
          << "ratio      " << g12(r.ratio()) << '\n';
      break;
    case Format::kCsv:
      out << "h,w,sigma,supremum,u,v,mass_u,mass_v,branch,k_factor,k_bound,"
             "ratio\n"
          << g12(p.h) << ',' << g12(p.w) << ',' << g12(p.sigma) << ','
          << g12(r.supremum) << ',' << g12(m.u()) << ',' << g12(m.v()) << ','
          << g12(m.mass_left()) << ',' << g12(m.mass_right()) << ',' << branch
          << ',' << g12(r.k_factor) << ',' << g12(r.k_bound) << ','
          << g12(r.ratio()) << '\n';
      break;
    case Format::kJson: {
      nlohmann::ordered_json o;
      o["h"] = p.h;
      o["w"] = p.w;
      o["sigma"] = p.sigma;
      o["supremum"] = r.supremum;
      o["maximizer"] = {{"u", m.u()},
                        {"v", m.v()},
                        {"mass_u", m.mass_left()},
                        {"mass_v", m.mass_right()}};
      o["branch"] = branch;
      o["k_factor"] = r.k_factor;
      o["k_bound"] = r.k_bound;
      o["ratio"] = r.ratio();
      out << o.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_ratio_curve(const SweepSpec& spec, std::ostream& out,
                    std::ostream& err) {
  std::vector<RatioRow> rows;
  try {
    rows = ratio_curve(spec);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  if (spec.format == Format::kJson) {
    write_json(out, rows);
  } else {
    write_csv(out, rows);
  }
  for (const std::string& w : ratio_monotonicity_warnings(rows)) {
    err << "warning: " << w << '\n';
  }
  if (!out) {
    err << "error: write failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_verify(const GridSpec& grid, const SweepSpec& sweep, std::ostream& out,
               std::ostream& err) {
  try {
    validate(grid);
    validate(sweep);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  const double tol = oracle_tolerance(grid.eps_points);
  std::size_t violations = 0;
  std::size_t cells = 0;
  double worst_rel = 0.0;
  auto violation = [&](const std::string& msg) {
    out << "VIOLATION " << msg << '\n';
    ++violations;
  };

  std::vector<double> ws = sweep.w_values;
  std::vector<double> hs = sweep.h_values;
  std::sort(ws.begin(), ws.end());
  std::sort(hs.begin(), hs.end());
  out << "verify eps_points=" << grid.eps_points
      << " random_dists=" << grid.random_dists << " seed=" << grid.seed
      << " oracle_tol=" << g12(tol) << '\n';
  for (double w : ws) {
    for (double h : hs) {
      for (double s : sweep.sigmas()) {
        const Params p{h, w, s};
        const std::string name = cell_name(h, w, s);
        ++cells;
        try {
          const BoundResult r = supremum(p);
          const BruteForceResult bf = brute_force_supremum(p, grid);
          const double rel = std::abs(bf.value - r.supremum) / r.supremum;
          worst_rel = std::max(worst_rel, rel);
          if (!(rel <= tol)) {
            violation(name + " oracle rel_err=" + g17(rel) + " closed=" +
                      g17(r.supremum) + " grid=" + g17(bf.value));
          }
          const double steps =
              std::abs(std::log((bf.argmax.u() - bf.origin) /
                                (r.maximizer.u() - bf.origin))) /
              bf.log_step;
          if (!(steps <= 1.5)) {
            violation(name + " argmax off by " + g12(steps) +
                      " grid steps: closed u=" + g17(r.maximizer.u()) +
                      " grid u=" + g17(bf.argmax.u()));
          }

          const CheckReport dom = random_dist_check(p, grid);
          for (const std::string& v : dom.violations) violation(v);

          const LinearSupReport lin = linear_sup_consistency(p, grid);
          if (!(lin.grid_max <= 1e-8)) {
            violation(name + " linear functional max=" + g17(lin.grid_max));
          }
          if (!(std::abs(lin.at_maximizer) <= 1e-9)) {
            violation(name + " linear functional at maximizer=" +
                      g17(lin.at_maximizer));
          }

          const CheckReport cor = corollary_y_check(p, grid);
          for (const std::string& v : cor.violations) violation(v);

          out << "cell " << name << " S=" << g12(r.supremum)
              << " branch=" << to_string(r.branch) << " oracle_rel=" << g12(rel)
              << " dom_max_ratio=" << g12(dom.max_ratio)
              << " lin_max=" << g12(lin.grid_max) << '\n';
        } catch (const std::exception& e) {
          violation(name + " error: " + e.what());
        }
      }
    }
  }

  try {
    const CheckReport mono =
        monotonicity_suite(MonotonicityGrid::standard(grid.seed));
    for (const std::string& v : mono.violations) violation(v);
    out << "monotonicity cases=" << mono.cases
        << " violations=" << mono.violations.size() << '\n';
  } catch (const std::exception& e) {
    violation(std::string("monotonicity error: ") + e.what());
  }

  out << "summary cells=" << cells << " worst_oracle_rel=" << g12(worst_rel)
      << " violations=" << violations << '\n';
  if (!out) {
    err << "error: write failed\n";
    return kExitIo;
  }
  return violations == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_bayes(double theta_max, double mean, double sigma, double t,
              Format format, std::ostream& out, std::ostream& err) {
  const BayesFamily fam{theta_max, mean, sigma};
  PosteriorBound b{0.0, 0.0, 0.0,
                   BoundResult{0.0, TwoPointDist(1.0, 1.0), 0.0, 0.0,
                               Branch::kNonposW},
                   false};
  std::optional<DiscretePrior> prior;
  try {
    b = posterior_mean_bound(fam, t);
    prior = extremal_prior(fam, t);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  switch (format) {
    case Format::kText:
      out << "exact      " << g12(b.exact) << '\n'
          << "simple     " << g12(b.simple) << '\n'
          << "trivial    " << g12(b.trivial) << '\n'
          << "branch     " << to_string(b.zero_mean.branch) << '\n';
      if (prior) {
        out << "extremal prior (attains exact):\n";
        for (const Atom& a : prior->dist().atoms()) {
          out << "  theta=" << g12(a.x) << " mass=" << g12(a.p) << '\n';
        }
        out << "  posterior_mean=" << g12(posterior_mean(*prior, t)) << '\n';
      } else {
        out << "extremal law is not an admissible prior; exact bound is not "
               "attained\n";
      }
      break;
    case Format::kCsv:
      out << "exact,simple,trivial,branch,attainable\n"
          << g12(b.exact) << ',' << g12(b.simple) << ',' << g12(b.trivial)
          << ',' << to_string(b.zero_mean.branch) << ','
          << (prior ? "true" : "false") << '\n';
      break;
    case Format::kJson: {
      nlohmann::ordered_json o;
      o["exact"] = b.exact;
      o["simple"] = b.simple;
      o["trivial"] = b.trivial;
      o["branch"] = std::string(to_string(b.zero_mean.branch));
      if (prior) {
        nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
        for (const Atom& a : prior->dist().atoms()) {
          atoms.push_back({{"theta", a.x}, {"mass", a.p}});
        }
        o["extremal_prior"] = atoms;
      } else {
        o["extremal_prior"] = nullptr;
      }
      out << o.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact bounds on Winsorized-tilted means"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  std::string output;
  std::string format_name = "text";
  const std::map<std::string, Format> formats{
      {"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--output", output, "Write to this file instead of stdout");
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->default_str(default_format);
  };

  Params params{0.0, 0.0, 0.0};
  CLI::App* bound = app.add_subcommand("bound", "Supremum, maximizer and K for one cell");
  bound->add_option("--h", params.h, "Tilt h > 0")->required();
  bound->add_option("--w", params.w, "Winsorization level w")->required();
  bound->add_option("--sigma", params.sigma, "Standard deviation bound")->required();
  add_common(bound, "text");

  SweepSpec curve = SweepSpec::figure();
  std::string spacing_name = "linear";
  CLI::App* rc = app.add_subcommand("ratio-curve", "S / (K sigma^2) over a sigma sweep");
  rc->add_option("--h", curve.h_values, "h values");
  rc->add_option("--w", curve.w_values, "w values");
  rc->add_option("--sigma-lo", curve.sigma_lo, "Smallest sigma");
  rc->add_option("--sigma-hi", curve.sigma_hi, "Largest sigma");
  rc->add_option("--sigma-n", curve.sigma_n, "Number of sigma values");
  rc->add_option("--spacing", spacing_name, "linear or log")
      ->check(CLI::IsMember({"linear", "log"}));
  add_common(rc, "csv");

  GridSpec grid;
  SweepSpec sweep = SweepSpec::verification();
  CLI::App* verify = app.add_subcommand("verify", "Brute-force verification sweep");
  verify->add_option("--seed", grid.seed, "Random seed");
  verify->add_option("--eps-points", grid.eps_points, "Two-point grid density");
  verify->add_option("--random-dists", grid.random_dists, "Random laws per cell");
  verify->add_option("--support-sizes", grid.support_sizes, "Support sizes");
  verify->add_option("--h", sweep.h_values, "h values");
  verify->add_option("--w", sweep.w_values, "w values");
  verify->add_option("--sigma", sweep.sigma_values, "sigma values");
  verify->add_option("--output", output, "Write to this file instead of stdout");

  double theta_max = 0.0, mean = 0.0, prior_sd = 0.0, t = 0.0;
  CLI::App* bayes = app.add_subcommand("bayes", "Posterior-mean bounds");
  bayes->add_option("--theta-max", theta_max, "Upper end of the prior support")
      ->required();
  bayes->add_option("--mean", mean, "Prior mean")->required();
  bayes->add_option("--sigma", prior_sd, "Prior standard deviation bound")
      ->required();
  bayes->add_option("--t", t, "Observed sufficient statistic")->required();
  add_common(bayes, "text");

  bool rc_format_given = false;
  try {
    app.parse(argc, argv);
    rc_format_given = rc->count("--format") > 0;
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!output.empty()) {
    file.open(output, std::ios::out | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << output << " for writing\n";
      return kExitIo;
    }
    sink = &file;
  }

  int code = kExitOk;
  if (app.got_subcommand(bound)) {
    code = cmd_bound(params, formats.at(format_name), *sink, err);
  } else if (app.got_subcommand(rc)) {
    curve.spacing = spacing_name == "log" ? Spacing::kLog : Spacing::kLinear;
    curve.format =
        rc_format_given && format_name == "json" ? Format::kJson : Format::kCsv;
    code = cmd_ratio_curve(curve, *sink, err);
  } else if (app.got_subcommand(verify)) {
    code = cmd_verify(grid, sweep, *sink, err);
  } else if (app.got_subcommand(bayes)) {
    code = cmd_bayes(theta_max, mean, prior_sd, t, formats.at(format_name),
                     *sink, err);
  }
  if (file.is_open()) {
    file.flush();
    if (!file) {
      err << "error: write to " << output << " failed\n";
      return kExitIo;
    }
  }
  return code;
}

}  // namespace tiltbound::cli
