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

// Command-line front end. Each command is a thin wrapper over the library
// and writes to caller-provided streams, so the commands can be exercised
// without spawning a process.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 I/O error.

#ifndef TILTBOUND_CLI_H_
#define TILTBOUND_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "tiltbound/core.h"
#include "tiltbound/oracle.h"

namespace tiltbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitIo = 3;

enum class Format { kText, kCsv, kJson };
enum class Spacing { kLinear, kLog };

struct SweepSpec {
  std::vector<double> h_values;
  std::vector<double> w_values;
  double sigma_lo = 0.0;
  double sigma_hi = 0.0;
  int sigma_n = 0;
  Spacing spacing = Spacing::kLinear;
  // When non-empty, used instead of the (lo, hi, n) range.
  std::vector<double> sigma_values;
  Format format = Format::kCsv;

  // w in {-1, 0, 1}, h in {0.2, 1, 5}, 200 evenly spaced sigma in (0, 1].
  static SweepSpec figure();
  // The 3 x 3 x 5 grid h in {0.2, 1, 5}, w in {-1, 0, 1},
  // sigma in {0.05, 0.2, 0.5, 1, 2}.
  static SweepSpec verification();

  // Sorted ascending.
  std::vector<double> sigmas() const;
};

// Throws std::invalid_argument on empty lists, sigma_lo <= 0, sigma_hi <
// sigma_lo, sigma_n < 2 or invalid h/sigma values.
void validate(const SweepSpec& spec);

struct RatioRow {
  double w;
  double h;
  double sigma;
  double S;
  double K;
  double ratio;
};

// Rows ordered by w, then h, then sigma, all ascending.
std::vector<RatioRow> ratio_curve(const SweepSpec& spec);

// Header `w,h,sigma,S,K,ratio`, 12 significant digits.
void write_csv(std::ostream& out, const std::vector<RatioRow>& rows);
// Array of objects with the CSV field names.
void write_json(std::ostream& out, const std::vector<RatioRow>& rows);

// One message per (w, h) curve step where the ratio increases with sigma.
std::vector<std::string> ratio_monotonicity_warnings(
    const std::vector<RatioRow>& rows);

int cmd_bound(const Params& p, Format format, std::ostream& out,
              std::ostream& err);
int cmd_ratio_curve(const SweepSpec& spec, std::ostream& out,
                    std::ostream& err);
int cmd_verify(const GridSpec& grid, const SweepSpec& sweep, std::ostream& out,
               std::ostream& err);
int cmd_bayes(double theta_max, double mean, double sigma, double t,
              Format format, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; `--output <path>` redirects `out` to a file.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace tiltbound::cli

#endif  // TILTBOUND_CLI_H_
