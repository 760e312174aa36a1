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

// Exact recovery of band-limited signals from sparse noise by best L1
// approximation, on a periodic grid.
//
// Signals are real trigonometric polynomials of period L with frequencies
// k / L, |k| <= tau L, sampled at x_j = j h, j = 0..M-1, M = L / h. The
// recovery LP is solved in its bounded dual form and certified by the duality
// gap; a second LP decides whether zero is the strict best approximation to a
// given noise sign pattern.

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/kernel1d.hpp"

namespace pwconc::recovery {

/// Coefficient tolerance for declaring a run recovered, relative to max |c_F|.
inline constexpr double kRecoveryTol = 1e-6;
/// Relative duality-gap tolerance for the recovery LP.
inline constexpr double kGapTol = 1e-9;
/// Certificate margins this close to zero mark a run indeterminate.
inline constexpr double kMarginTieTol = 1e-8;

/// Grid and basis of the band space. Basis columns are
/// 1, cos(2 pi x / L), sin(2 pi x / L), ..., cos(2 pi K x / L), sin(2 pi K x / L).
class BandSpace {
 public:
  /// Throws ConfigError unless L / h is a positive integer and
  /// L / h >= 4 (2 ceil(tau L) + 1).
  BandSpace(double period, double step, double tau);

  double period() const { return period_; }
  double step() const { return step_; }
  double tau() const { return tau_; }
  int points() const { return points_; }
  int k_max() const { return k_max_; }
  int dimension() const { return 2 * k_max_ + 1; }
  double node(int j) const { return j * step_; }
  const Eigen::MatrixXd& basis() const { return basis_; }

  Eigen::VectorXd synthesize(const Eigen::VectorXd& coeffs) const;
  /// h * sum |v_j|
  double l1_norm(const Eigen::VectorXd& samples) const;

 private:
  double period_;
  double step_;
  double tau_;
  int points_;
  int k_max_;
  Eigen::MatrixXd basis_;
};

struct DiscreteSignal {
  std::shared_ptr<const BandSpace> space;
  Eigen::VectorXd coeffs;
  Eigen::VectorXd samples;
  /// |h sum s^2 - L (c_0^2 + sum (a_k^2 + b_k^2) / 2)| / (h sum s^2)
  double parseval_defect = 0.0;
};

/// Standard-normal coefficients from `seed`, scaled so that h sum |F| = 1.
DiscreteSignal synth_signal(double period, double step, double tau, std::uint64_t seed);
DiscreteSignal synth_signal(std::shared_ptr<const BandSpace> space, std::uint64_t seed);

struct Interval {
  double start = 0.0;
  double end = 0.0;  // half-open [start, end)
};

struct NoiseSpec {
  std::vector<Interval> support;  // disjoint, sorted, inside [0, L)
  double amplitude_min = 0.1;     // magnitudes are log-uniform in
  double amplitude_max = 10.0;    // [min, max] times a caller-supplied scale
  std::uint64_t seed = 0;
};

/// Throws DomainError unless intervals are non-empty, sorted, disjoint and in [0, L).
void validate_noise(const NoiseSpec& noise, double period);

struct WindowDensity {
  double abs = 0.0;  // sup_x |N cap [x, x + delta]|, circular on the period
  double rel = 0.0;  // abs / delta
};

/// Exact: the window measure is piecewise linear in x with breakpoints at
/// interval ends and interval ends minus delta. Requires 0 < delta <= L.
WindowDensity window_density(const NoiseSpec& noise, double delta, double period);

/// Grid indices j with x_j in the support.
std::vector<int> support_indices(const NoiseSpec& noise, const BandSpace& space);

/// Noise samples on the grid: zero off the support, random sign and
/// log-uniform magnitude times `scale` on it.
Eigen::VectorXd noise_samples(const NoiseSpec& noise, const BandSpace& space, double scale);

/// Union of grid cells [i h, (i + 1) h) whose sliding-window density over
/// windows of `delta` equals floor(target * delta / h) / (delta / h). Pieces of
/// random length are placed by seeded uniform draws while the window count
/// stays under the cap; single cells then top the densest window up to it.
/// target >= 1 gives the full period, target <= 0 the empty set.
NoiseSpec realize_noise_support(const BandSpace& space, double delta, double target,
                                std::uint64_t seed);

struct L1Fit {
  Eigen::VectorXd coeffs;
  double objective = 0.0;  // h sum |observed - basis c|
  double dual_objective = 0.0;
  double duality_gap = 0.0;      // primal minus dual, h-weighted
  double dual_residual = 0.0;    // max |basis^T w|
  Eigen::VectorXd dual_weights;  // w_j in [-1, 1]
  int iterations = 0;
};

/// argmin_c h sum_j |observed_j - (basis c)_j|. Throws NumericalError if the
/// LP fails or the gap exceeds kGapTol (1 + |objective|).
L1Fit best_l1_approx(const Eigen::VectorXd& observed, const BandSpace& space);

/// h sum_{j in N} |G_j| / h sum_j |G_j| for G = basis * coeffs.
double concentration_ratio(const Eigen::VectorXd& g_coeffs, const BandSpace& space,
                           std::span<const int> support);

struct CertificateResult {
  /// Smallest max_{j not in N} |w_j| over w with basis^T w = 0 and w = sign on N.
  double complement_sup = 0.0;
  /// (complement_sup - 1) / (complement_sup + 1); negative iff zero is the
  /// strict best approximation to every noise with this sign pattern.
  double margin = 0.0;
  int iterations = 0;
};

/// `sign` has one entry per grid point, in {-1, 0, 1}; N is where it is nonzero.
/// Throws DomainError for empty N, NumericalError if the LP fails.
CertificateResult dual_certificate_check(std::span<const int> sign, const BandSpace& space);

struct GridConfig {
  double period = 0.0;  // 0 selects 8 / tau
  int cells_per_window = 256;
};

struct ExperimentReport {
  int run_id = 0;
  double tau = 0.0;
  double delta = 0.0;
  double period = 0.0;
  double step = 0.0;
  std::uint64_t seed = 0;
  double requested_density = 0.0;
  double rel_density = 0.0;
  double rel_threshold = 0.0;
  bool recovered = false;
  bool indeterminate = false;
  double max_coeff_error = 0.0;
  double l1_objective = 0.0;
  double noise_l1 = 0.0;
  double duality_gap = 0.0;
  double certificate_margin = 0.0;  // -1 when N is empty, NaN when the run failed
  std::string error;                // set when the run failed
  bool below_threshold() const { return rel_density < rel_threshold; }
};

/// Resolves the period and grid step used for (tau, delta).
std::shared_ptr<const BandSpace> make_space(double tau, double delta, const GridConfig& grid);

/// One run per (density, seed), in that nesting order; run_id counts from 0.
std::vector<ExperimentReport> logan_experiment(const kernel1d::KernelParams1D& params,
                                               const GridConfig& grid,
                                               std::span<const double> densities,
                                               std::span<const std::uint64_t> seeds);

/// Densities expressed as fractions of the run's rel_threshold.
std::vector<double> threshold_fractions(const kernel1d::KernelParams1D& params,
                                        std::span<const double> fractions);

}  // namespace pwconc::recovery
