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

#include "core/kernel1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "core/errors.hpp"
#include "core/quadrature.hpp"
#include "core/specfun.hpp"

namespace pwconc::kernel1d {

namespace {

constexpr double kPi = std::numbers::pi;

void require_tau(double tau, const char* where) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw DomainError(std::string(where) + ": tau must be finite and >= 0");
  }
}

// (sin(pi u) / (pi u))^2
double sinc_pi_sq(double u) {
  const double s = specfun::sinc_u(kPi * u);
  return s * s;
}

// d/du (sin(pi u) / (pi u))^2
double sinc_pi_sq_derivative(double u) {
  return 2.0 * kPi * specfun::sinc_u(kPi * u) * specfun::sinc_u_derivative(kPi * u);
}

// sum_{n > n_max} n^-s by direct summation of the first terms plus an
// Euler-Maclaurin remainder.
double zeta_tail(int s, int n_max) {
  constexpr int direct = 64;
  double sum = 0.0;
  const int first = n_max + 1;
  for (int n = first; n < first + direct; ++n) sum += std::pow(static_cast<double>(n), -s);
  const double m = first + direct;
  const double ms = std::pow(m, -s);
  sum += m * ms / (s - 1.0) + 0.5 * ms + s * ms / (12.0 * m) -
         s * (s + 1.0) * (s + 2.0) * ms / (720.0 * m * m * m);
  return sum;
}

}  // namespace

KernelParams1D::KernelParams1D(double tau, double delta) : tau_(tau), delta_(delta) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be finite and > 0");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("delta must be finite and > 0");
}

double eval_g(double tau, double x) {
  require_tau(tau, "eval_g");
  const double ax = std::abs(x);
  if (ax >= 1.0) return 0.0;
  const double a = 2.0 * tau + 1.0;
  return (1.0 - ax) * a * specfun::sinc_u(kPi * a * x) * specfun::sinc_u(kPi * x);
}

int g_hat_panels(double tau, double t) {
  return std::max(8, static_cast<int>(std::ceil(2.0 * (tau + 1.0 + std::abs(t)))));
}

double eval_g_hat_with_panels(double tau, double t, int panels) {
  require_tau(tau, "eval_g_hat");
  const double w = 2.0 * kPi * t;
  return 2.0 * quad::composite([&](double x) { return eval_g(tau, x) * std::cos(w * x); }, 0.0,
                               1.0, panels);
}

double eval_g_hat(double tau, double t) { return eval_g_hat_with_panels(tau, t, g_hat_panels(tau, t)); }

double g_hat_derivative(double tau, double t) {
  require_tau(tau, "g_hat_derivative");
  const double w = 2.0 * kPi * t;
  return -2.0 * quad::composite(
                    [&](double x) { return 2.0 * kPi * x * eval_g(tau, x) * std::sin(w * x); },
                    0.0, 1.0, g_hat_panels(tau, t));
}

double g_hat_second_derivative(double tau, double t) {
  require_tau(tau, "g_hat_second_derivative");
  return sinc_pi_sq(t - tau - 1.0) + sinc_pi_sq(t + tau + 1.0) - sinc_pi_sq(t - tau) -
         sinc_pi_sq(t + tau);
}

double g_hat_second_derivative_rational_form(double tau, double t) {
  require_tau(tau, "g_hat_second_derivative_rational_form");
  const double pi2 = kPi * kPi;
  const auto left = [&](double u) {
    if (std::min(std::abs(u), std::abs(u - 1.0)) <= specfun::kSincTaylorCutoff) {
      return pi2 * (sinc_pi_sq(u - 1.0) - sinc_pi_sq(u));
    }
    const double s = std::sin(kPi * u);
    return s * s * (2.0 * u - 1.0) / (u * u * (u - 1.0) * (u - 1.0));
  };
  const auto right = [&](double v) {
    if (std::min(std::abs(v), std::abs(v + 1.0)) <= specfun::kSincTaylorCutoff) {
      return pi2 * (sinc_pi_sq(v) - sinc_pi_sq(v + 1.0));
    }
    const double s = std::sin(kPi * v);
    return s * s * (2.0 * v + 1.0) / (v * v * (v + 1.0) * (v + 1.0));
  };
  return left(t - tau) - right(t + tau);
}

double g_hat_third_derivative(double tau, double t) {
  require_tau(tau, "g_hat_third_derivative");
  return sinc_pi_sq_derivative(t - tau - 1.0) + sinc_pi_sq_derivative(t + tau + 1.0) -
         sinc_pi_sq_derivative(t - tau) - sinc_pi_sq_derivative(t + tau);
}

double sinc_squared_integral(double a, double b) {
  // d/du (-sin^2 u / u) + sin(2u)/u = sin^2 u / u^2
  const auto boundary = [](double u) {
    if (u == 0.0) return 0.0;
    const double s = std::sin(u);
    return s * s / u;
  };
  return boundary(a) - boundary(b) + specfun::sine_integral(2.0 * b) -
         specfun::sine_integral(2.0 * a);
}

PartialsResidual partials_identity_residual(double tau, double t) {
  require_tau(tau, "partials_identity_residual");
  const auto central = [](auto&& f, double h) { return (f(h) - f(-h)) / (2.0 * h); };
  const auto richardson = [&](auto&& f) {
    const double h = kPartialsStep;
    return (4.0 * central(f, 0.5 * h) - central(f, h)) / 3.0;
  };
  const double d_t = richardson([&](double h) { return eval_g_hat(tau, t + h); });
  const double d_tau = richardson([&](double h) { return eval_g_hat(tau + h, t); });

  const double s = t + tau;
  const auto integrand = [](double u) {
    const double v = specfun::sinc_u(u);
    return v * v;
  };
  PartialsResidual out;
  out.lhs = d_t + d_tau;
  out.rhs_2pi = quad::composite(integrand, 2.0 * kPi * s, 2.0 * kPi * (s + 1.0), 16);
  out.rhs_pi = 2.0 / kPi * quad::composite(integrand, kPi * s, kPi * (s + 1.0), 8);
  out.residual_2pi = out.lhs - out.rhs_2pi;
  out.residual_pi = out.lhs - out.rhs_pi;
  return out;
}

double AtomicMeasure::alternating_sum_truncated() const {
  double sum = 0.0;
  for (int n = -n_max; n <= n_max; ++n) sum += (n % 2 == 0 ? 1.0 : -1.0) * weight(n);
  return sum;
}

double AtomicMeasure::abs_sum_truncated() const {
  double sum = 0.0;
  for (double w : weights) sum += std::abs(w);
  return sum;
}

double AtomicMeasure::sign_violation() const {
  double worst = 0.0;
  for (int n = -n_max; n <= n_max; ++n) {
    const double signed_w = (n % 2 == 0 ? 1.0 : -1.0) * weight(n);
    worst = std::max(worst, -signed_w);
  }
  return worst;
}

int default_n_max(const KernelParams1D& params) {
  return static_cast<int>(std::ceil(64.0 * (1.0 + params.tau() * params.delta())));
}

double alternating_tail(double half_width, double f1, double f3, int n_max) {
  const double l = half_width;
  const double pi2 = kPi * kPi;
  return 2.0 * l * f1 / pi2 * zeta_tail(2, n_max) -
         2.0 * l * l * l * f3 / (pi2 * pi2) * zeta_tail(4, n_max);
}

namespace {

std::vector<double> cosine_coefficients(const std::vector<double>& values, const quad::Rule& rule,
                                        double half_width, int n_max) {
  std::vector<double> c(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    const double w = kPi * n / half_width;
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i] * values[i] * std::cos(w * rule.nodes[i]);
    }
    c[static_cast<std::size_t>(n)] = sum / half_width;
  }
  return c;
}

}  // namespace

AtomicMeasure inverse_coeffs(const KernelParams1D& params, int n_max) {
  if (n_max < 1) throw DomainError("inverse_coeffs: n_max must be positive");
  const double s = params.scaled_tau();

  const auto sample = [&](int panels, quad::Rule& rule) {
    rule = quad::composite_nodes(0.0, s, panels);
    std::vector<double> values(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double gh = eval_g_hat(s, rule.nodes[i]);
      if (!(gh > 0.0)) {
        std::ostringstream msg;
        msg << "inverse_coeffs: ghat_" << s << "(" << rule.nodes[i]
            << ") = " << gh << " is not positive on the band";
        throw InvariantViolation(msg.str());
      }
      values[i] = 1.0 / gh;
    }
    return values;
  };

  if (!(eval_g_hat(s, s) > 0.0)) {
    throw InvariantViolation("inverse_coeffs: ghat is not positive at the band edge");
  }

  const int panels = n_max + static_cast<int>(std::ceil(2.0 * s)) + 8;
  quad::Rule rule;
  quad::Rule rule_fine;
  const auto values = sample(panels, rule);
  const auto values_fine = sample(2 * panels, rule_fine);
  const auto coarse = cosine_coefficients(values, rule, s, n_max);
  const auto fine = cosine_coefficients(values_fine, rule_fine, s, n_max);

  double worst = 0.0;
  int worst_n = 0;
  for (int n = 0; n <= n_max; ++n) {
    const double diff = std::abs(coarse[n] - fine[n]);
    if (diff > worst) {
      worst = diff;
      worst_n = n;
    }
  }
  if (worst > 1e-10) {
    std::ostringstream msg;
    msg << "inverse_coeffs: panel doubling changed a_" << worst_n << " by " << worst << " (panels "
        << panels << ", tau " << params.tau() << ", delta " << params.delta() << ")";
    throw NumericalError(msg.str());
  }

  AtomicMeasure m;
  m.spacing = 1.0 / (2.0 * params.tau());
  m.n_max = n_max;
  m.weights.resize(2 * static_cast<std::size_t>(n_max) + 1);
  for (int n = -n_max; n <= n_max; ++n) {
    m.weights[static_cast<std::size_t>(n + n_max)] = fine[static_cast<std::size_t>(std::abs(n))];
  }
  if (const double v = m.sign_violation(); v > 1e-11) {
    std::ostringstream msg;
    msg << "inverse_coeffs: coefficients do not alternate in sign (violation " << v << ")";
    throw InvariantViolation(msg.str());
  }

  // Endpoint derivatives of f = 1/ghat_s at s.
  const double g0 = eval_g_hat(s, s);
  const double g1 = g_hat_derivative(s, s);
  const double g2 = g_hat_second_derivative(s, s);
  const double g3 = g_hat_third_derivative(s, s);
  const double f1 = -g1 / (g0 * g0);
  const double f3 = -g3 / (g0 * g0) + 6.0 * g1 * g2 / (g0 * g0 * g0) -
                    6.0 * g1 * g1 * g1 / (g0 * g0 * g0 * g0);
  m.tail_bound = std::abs(alternating_tail(s, f1, f3, n_max));
  return m;
}

double total_variation(const KernelParams1D& params) {
  const double s = params.scaled_tau();
  const double gh = eval_g_hat(s, s);
  if (!(gh > 0.0)) throw InvariantViolation("total_variation: ghat_s(s) is not positive");
  return 1.0 / gh;
}

ConcentrationBound1D concentration_constant(const KernelParams1D& params) {
  const double tau = params.tau();
  const double delta = params.delta();
  ConcentrationBound1D b;
  b.inv_norm = total_variation(params);
  b.sup_norm_g = 2.0 * tau + 2.0 / delta;
  b.constant = b.sup_norm_g * b.inv_norm;
  b.abs_threshold = 1.0 / (2.0 * b.constant);
  b.rel_threshold = b.abs_threshold / delta;
  b.ratio = b.constant / (tau + 1.0 / delta);
  b.within_80_13 = b.ratio <= 80.0 / 13.0;
  if (tau * delta >= 2.0) b.within_5_2 = b.ratio <= 2.5;
  return b;
}

double donoho_logan_constant(double tau, double delta) {
  if (!(tau > 0.0) || !(delta > 0.0)) throw DomainError("tau and delta must be positive");
  if (tau * delta >= 1.0) {
    throw DomainError(
        "the indicator-window constant pi tau / sin(pi tau delta) requires tau * delta < 1");
  }
  return kPi * tau / std::sin(kPi * tau * delta);
}

double density_threshold_1d(const KernelParams1D& params, Kernel kernel) {
  const double tau = params.tau();
  const double delta = params.delta();
  switch (kernel) {
    case Kernel::indicator: {
      const double c = donoho_logan_constant(tau, delta);
      return 1.0 / (2.0 * c * delta);
    }
    case Kernel::tapered:
      return concentration_constant(params).rel_threshold;
  }
  throw DomainError("unknown kernel");
}

}  // namespace pwconc::kernel1d
