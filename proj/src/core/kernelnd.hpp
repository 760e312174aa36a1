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

// d-dimensional concentration machinery for a cube spectrum [-lambda, lambda]^d
// and a ball window B(x, alpha).
//
// The kernel is the indicator of B(0, alpha), with transform
//   ghat_alpha(t) = alpha^{d/2} J_{d/2}(2 pi alpha |t|) / |t|^{d/2}.
// While 2 pi sqrt(d) alpha lambda < j_{d/2}(1) the reciprocal 1/ghat_alpha is
// positive on the cube and its Fourier coefficients H(n) carry the sign
// (-1)^{n_1 + ... + n_d}, so the inverse measure has total variation
// 1/ghat_alpha(lambda, ..., lambda).

#include <span>
#include <string>
#include <vector>

#include "core/specfun.hpp"

namespace pwconc::kernelnd {

/// Largest dimension for which tensor-product coefficient quadrature is offered.
inline constexpr int kMaxQuadratureDim = 3;

class BallKernelParams {
 public:
  /// Validates d >= 1, lambda > 0, alpha > 0. The Bessel hypothesis is checked
  /// separately by the operations that need it.
  BallKernelParams(int d, double lambda, double alpha);

  int d() const { return d_; }
  double lambda() const { return lambda_; }
  double alpha() const { return alpha_; }
  /// 2 pi sqrt(d) alpha lambda, the Bessel argument at the cube corner.
  double corner_argument() const;

 private:
  int d_;
  double lambda_;
  double alpha_;
};

struct HypothesisCheck {
  double corner_argument = 0.0;  // 2 pi sqrt(d) alpha lambda
  double first_zero = 0.0;       // j_{d/2}(1)
  bool holds = false;            // corner_argument < first_zero
  // The same inequality written without the 2 pi factor:
  // alpha lambda < j_{d/2}(1) / sqrt(d). Reported, never enforced.
  double product = 0.0;
  double product_bound = 0.0;
  bool product_form_holds = false;
};

HypothesisCheck check_hypothesis(const BallKernelParams& params);

/// Volume pi^{d/2} alpha^d / Gamma(d/2 + 1) of the d-ball of radius alpha.
double ball_volume(int d, double alpha);

/// Fourier transform of the indicator of B(0, alpha) at |t| = t_norm.
double ball_transform(int d, double alpha, double t_norm);

/// (sqrt(d) lambda)^{d/2} / (alpha^{d/2} J_{d/2}(2 pi sqrt(d) alpha lambda)).
/// Throws DomainError when the Bessel hypothesis fails.
double concentration_constant_nd(const BallKernelParams& params);

/// 24 (1 + ||n||_inf) nodes per axis.
int default_quad_nodes(int n_inf);

/// H(n) = (2 lambda)^-d integral over the cube of cos-product / ghat_alpha(|x|),
/// by tensor Gauss-Legendre with `quad_nodes` per axis, certified against the
/// rule with twice the nodes (change > 1e-7 throws NumericalError). d <= 3.
double h_coeff(const BallKernelParams& params, std::span<const int> n, int quad_nodes);

/// All H(n) with ||n||_inf <= n_max, for d in {1, 2}. Shares one tensor grid.
class HCoefficientTable {
 public:
  HCoefficientTable(int d, int n_max, std::vector<double> values);

  int d() const { return d_; }
  int n_max() const { return n_max_; }
  /// Coefficient at multi-index n (length d), |n_j| <= n_max.
  double at(std::span<const int> n) const;
  /// Visits every (n, H(n)) with ||n||_inf <= n_max.
  template <class F>
  void for_each(F&& f) const {
    std::vector<int> n(static_cast<std::size_t>(d_), -n_max_);
    while (true) {
      f(std::span<const int>(n), at(n));
      int k = 0;
      while (k < d_ && n[static_cast<std::size_t>(k)] == n_max_) {
        n[static_cast<std::size_t>(k)] = -n_max_;
        ++k;
      }
      if (k == d_) break;
      ++n[static_cast<std::size_t>(k)];
    }
  }

 private:
  int d_;
  int n_max_;
  std::vector<double> values_;  // non-negative indices only; H is even in each n_j
};

HCoefficientTable h_coeff_table(const BallKernelParams& params, int n_max);

struct TotalVariationNd {
  int n_max = 0;
  double closed_form = 0.0;           // 1 / ghat_alpha(sqrt(d) lambda)
  double truncated_abs_sum = 0.0;     // sum_{||n||_inf <= n_max} |H(n)|
  double truncated_alternating = 0.0; // same with (-1)^{sum n} H(n)
  double gap = 0.0;                   // closed_form - truncated_abs_sum
  bool has_tail_estimate = false;     // d = 1 only
  double tail_estimate = 0.0;
};

/// d <= 2 (the cross-check sum costs (2 n_max + 1)^d coefficients).
TotalVariationNd total_variation_nd(const BallKernelParams& params, int n_max);

enum class WindowShape { ball, cube };

struct DensityThreshold {
  WindowShape shape = WindowShape::ball;
  int d = 1;
  double lambda = 0.0;
  double size = 0.0;  // alpha for a ball, delta for a cube
  double threshold = 0.0;
};

/// Gamma(d/2+1) J_{d/2}(2 pi sqrt(d) alpha lambda) / (2 (pi alpha sqrt(d) lambda)^{d/2}).
DensityThreshold density_threshold_ball(const BallKernelParams& params);

/// (1/2) (sin(lambda delta / 2) / (lambda delta / 2))^d; requires lambda delta < 2 pi.
DensityThreshold density_threshold_cube(int d, double lambda, double delta);

enum class Scenario {
  circumscribed,  // ball circumscribing the cube: alpha = delta sqrt(d) / 2
  equal_volume,   // ball with the cube's volume
};

/// Spectrum half-width implied by both comparison scenarios: with it the
/// corner Bessel argument equals d/2 (up to the Stirling factor in the
/// equal-volume case).
inline constexpr double kScenarioLambda = 3.141592653589793;

/// Cube side used by a scenario.
double scenario_delta(Scenario scenario);

struct WindowComparison {
  int d = 1;
  Scenario scenario = Scenario::circumscribed;
  double lambda = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  bool ball_hypothesis_holds = false;
  bool cube_hypothesis_holds = false;
  double ball_threshold = 0.0;  // NaN when the ball hypothesis fails
  double cube_threshold = 0.0;  // NaN when lambda delta >= 2 pi
  double asymptotic_ball = 0.0; // large-d approximation of the ball threshold
  double quoted_cube = 0.0;     // closed cube expression quoted for the scenario
  bool cube_exceeds_ball = false;
  std::string note;
};

WindowComparison compare_windows(int d, Scenario scenario, double lambda = kScenarioLambda);

/// y^{p/2} / J_p(sqrt(y)) = 1 / (J_p(x)/x^p) at x = sqrt(y), for 0 <= y < j_p(1)^2.
double laplace_kernel_value(specfun::BesselOrder p, double y);

struct MonotonicityReport {
  double p = 0.0;
  int max_order = 0;
  double step = 0.0;
  double tolerance = 0.0;
  std::vector<double> min_difference;  // entry k-1 holds the minimum k-th forward difference
  double overall_min = 0.0;
  bool passed = false;
};

/// Forward differences of orders 1..max_order of y -> y^{p/2}/J_p(sqrt y) on
/// an equispaced grid inside (0, j_p(1)^2). A Laplace representation with a
/// non-negative density makes all of them non-negative.
MonotonicityReport absolute_monotonicity_check(specfun::BesselOrder p,
                                               std::span<const double> y_grid, int max_order,
                                               double tolerance = 1e-9);

}  // namespace pwconc::kernelnd
