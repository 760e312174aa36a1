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

// One-dimensional concentration machinery.
//
// The auxiliary kernel g_tau is supported on [-1, 1]:
//
//   g_tau(x) = (1 - |x|) sin(pi (2 tau + 1) x) sin(pi x) / (pi x)^2,
//
// with Fourier transform ghat_tau(t). For a window of length delta the kernel
// is rescaled to the support [-delta/2, delta/2] and normalized so that its
// transform is ghat_s(delta t / 2), s = tau delta / 2. The reciprocal of that
// transform is positive and convex on the band [-tau, tau]; its Fourier
// coefficients a_n alternate in sign and define the atomic measure
// sum a_n delta_{n / (2 tau)} inverting convolution with the kernel on the
// band. The concentration constant is
//
//   C(tau, delta) = ||g||_inf |nu| = (2 tau + 2 / delta) / ghat_s(s).

#include <optional>
#include <vector>

namespace pwconc::kernel1d {

/// Band half-width tau and window length delta, both positive.
class KernelParams1D {
 public:
  KernelParams1D(double tau, double delta);

  double tau() const { return tau_; }
  double delta() const { return delta_; }
  /// tau * delta / 2, the parameter of the unit-support kernel after rescaling.
  double scaled_tau() const { return 0.5 * tau_ * delta_; }

 private:
  double tau_;
  double delta_;
};

/// g_tau(x); zero outside [-1, 1], 2 tau + 1 at the origin. Requires tau >= 0.
double eval_g(double tau, double x);

/// Number of 20-point panels on [0, 1] used for ghat_tau(t).
int g_hat_panels(double tau, double t);

/// ghat_tau(t) = integral of g_tau(x) cos(2 pi x t) over [-1, 1], by composite
/// Gauss-Legendre with panel width at most half the fastest period.
double eval_g_hat(double tau, double t);

/// Same integral with an explicit panel count, for convergence checks.
double eval_g_hat_with_panels(double tau, double t, int panels);

/// d/dt ghat_tau(t), by quadrature.
double g_hat_derivative(double tau, double t);

/// Closed form of ghat_tau''(t) as a signed sum of four squared sincs
///   S(t-tau-1) + S(t+tau+1) - S(t-tau) - S(t+tau),  S(u) = (sin(pi u)/(pi u))^2.
double g_hat_second_derivative(double tau, double t);

/// The rational-times-sin^2 rearrangement
///   sin^2(pi(t-tau))(2(t-tau)-1)/((t-tau)^2 (t-tau-1)^2) - (same at t+tau, mirrored)
/// evaluated with removable limits. Equals pi^2 times ghat''; kept to report
/// that scale factor.
double g_hat_second_derivative_rational_form(double tau, double t);

/// Closed form of ghat_tau'''(t).
double g_hat_third_derivative(double tau, double t);

struct PartialsResidual {
  double lhs = 0.0;           // d/dt ghat + d/dtau ghat, numerically
  double rhs_2pi = 0.0;       // integral of sin^2 u/u^2 over [2 pi (t+tau), 2 pi (t+tau+1)]
  double rhs_pi = 0.0;        // (2/pi) * integral over [pi (t+tau), pi (t+tau+1)]
  double residual_2pi = 0.0;  // lhs - rhs_2pi
  double residual_pi = 0.0;   // lhs - rhs_pi
};

/// Finite-difference step for the partial derivatives (one Richardson level).
inline constexpr double kPartialsStep = 1e-5;

/// Compares the sum of the two first partials of ghat with both candidate
/// integral representations. Exactly one residual is expected to vanish.
PartialsResidual partials_identity_residual(double tau, double t);

/// Integral of sin^2(u)/u^2 over [a, b] via sine integrals.
double sinc_squared_integral(double a, double b);

/// Atomic measure sum_n weight(n) delta_{n * spacing}.
struct AtomicMeasure {
  double spacing = 0.0;
  int n_max = 0;
  std::vector<double> weights;  // index n + n_max for |n| <= n_max
  double tail_bound = 0.0;      // estimate of sum_{|n| > n_max} |a_n|

  double weight(int n) const { return weights.at(static_cast<std::size_t>(n + n_max)); }
  /// sum_{|n| <= n_max} (-1)^n a_n
  double alternating_sum_truncated() const;
  /// sum_{|n| <= n_max} |a_n|
  double abs_sum_truncated() const;
  /// Truncated alternating sum plus the tail estimate. All (-1)^n a_n are
  /// non-negative, so the tail enters with a plus sign.
  double alternating_sum() const { return alternating_sum_truncated() + tail_bound; }
  /// Largest violation of a_n (-1)^n >= 0; zero when the pattern holds.
  double sign_violation() const;
};

/// ceil(64 (1 + tau delta)).
int default_n_max(const KernelParams1D& params);

/// Fourier coefficients of 1/ghat_{s}(delta t / 2) on [-tau, tau] for |n| <= n_max.
///
/// The tail sum_{|n| > n_max} |a_n| is estimated from the endpoint expansion
/// a_n (-1)^n ~ s f'(s)/(pi n)^2 - s^3 f'''(s)/(pi n)^4 with f = 1/ghat_s, which is
/// exact for the leading terms of a function smooth on the closed band.
///
/// Throws InvariantViolation if ghat_s is not positive on [0, s], NumericalError
/// if panel doubling changes a coefficient by more than 1e-10.
AtomicMeasure inverse_coeffs(const KernelParams1D& params, int n_max);

/// sum_{|n| > n_max} (-1)^n c_n for the Fourier coefficients c_n of an even
/// function f with period 2 * half_width, from its endpoint derivatives.
double alternating_tail(double half_width, double f1, double f3, int n_max);

/// 1 / ghat_s(s), s = tau delta / 2.
double total_variation(const KernelParams1D& params);

struct ConcentrationBound1D {
  double constant = 0.0;       // C(tau, delta)
  double sup_norm_g = 0.0;     // ||g_{tau,delta}||_inf = 2 tau + 2 / delta
  double inv_norm = 0.0;       // 1 / ghat_s(s)
  double abs_threshold = 0.0;  // 1 / (2 C)
  double rel_threshold = 0.0;  // abs_threshold / delta
  double ratio = 0.0;          // C / (tau + 1 / delta)
  bool within_80_13 = false;
  std::optional<bool> within_5_2;  // set when tau delta >= 2
};

ConcentrationBound1D concentration_constant(const KernelParams1D& params);

/// pi tau / sin(pi tau delta) for the indicator window; requires tau delta < 1.
double donoho_logan_constant(double tau, double delta);

enum class Kernel {
  tapered,    // g_tau construction, valid for all tau, delta
  indicator,  // indicator of the window, valid for tau delta < 1
};

/// Largest Nyquist density of the noise support that still guarantees recovery.
double density_threshold_1d(const KernelParams1D& params, Kernel kernel);

}  // namespace pwconc::kernel1d
