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

// Dense bounded-variable revised simplex for
//
//   minimize c^T x  subject to  A x = b,  lower <= x <= upper,
//
// with few rows and many columns. Bounds may be infinite. Two phases with one
// artificial per row; the basis inverse is kept explicitly, updated by
// rank-one eta steps and refactorized periodically.

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace pwconc::lp {

enum class Status { optimal, infeasible, unbounded, iteration_limit };

const char* to_string(Status s);

struct Problem {
  Eigen::MatrixXd a;  // m x n
  Eigen::VectorXd b;  // m
  Eigen::VectorXd c;  // n
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

struct Options {
  int max_iterations = 200000;
  int refactor_interval = 64;
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-10;
  double pivot_tol = 1e-9;
  /// Consecutive degenerate pivots before switching to Bland's rule.
  int stall_limit = 50;
  /// Optional starting side for each nonbasic structural variable (true =
  /// upper bound). Ignored for entries whose chosen bound is infinite.
  std::vector<bool> start_at_upper;
};

struct Result {
  Status status = Status::iteration_limit;
  Eigen::VectorXd x;
  double objective = 0.0;
  /// Simplex multipliers y with c_B = B^T y at the final basis.
  Eigen::VectorXd duals;
  int iterations = 0;
  int phase1_iterations = 0;
  /// max |A x - b| at the returned point.
  double primal_residual = 0.0;
  std::string message;
};

Result solve(const Problem& problem, const Options& options = {});

}  // namespace pwconc::lp
