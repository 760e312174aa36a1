// Copyright 2026 The pwconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Self-verification suites. Every record carries the computed value, the
// target, the comparison used and whether the row is a claim that must hold
// (claimed) or a diagnostic that is only reported.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pwconc::verify {

enum class Suite { all, specfun, kernel1d, kernelnd, recovery };

std::optional<Suite> parse_suite(std::string_view name);
const char* to_string(Suite s);

struct Record {
  std::string suite;
  std::string check;
  std::string params;    // "k=v;k=v"
  double computed = 0.0;
  std::string relation;  // "<", "<=", ">", ">=", "abs_diff<=", "info"
  double target = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool claimed = true;
  std::string note;
};

std::vector<Record> run(Suite suite, std::uint64_t seed);

/// True when every claimed record passes.
bool claims_hold(const std::vector<Record>& records);

// Shared summaries, also used by the acceptance driver.

struct PartialsGrid {
  int points = 0;
  double max_residual_2pi = 0.0;
  double max_residual_pi = 0.0;
  /// "pi" when the (2/pi) * [pi (t+tau), pi (t+tau+1)] form has the smaller
  /// worst-case residual, "2pi" otherwise.
  std::string holding_form;
};

/// 5 x 5 grid: tau in {0.25, 1, 2, 3, 4}, t in {-tau, -tau/2, 0, tau/2, tau}.
PartialsGrid partials_grid();

struct RatioGrid {
  int points = 0;
  double max_ratio = 0.0;
  double max_ratio_large = 0.0;  // over tau delta >= 2
  double ratio_at_1e3 = 0.0;     // at tau delta = 1000
  double argmax_product = 0.0;   // tau delta where max_ratio occurs
};

/// n x n log grid: tau in [0.1, 10], tau delta in [1e-3, 1e3].
RatioGrid ratio_grid(int n);

}  // namespace pwconc::verify
