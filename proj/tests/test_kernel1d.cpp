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

#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "core/errors.hpp"
#include "core/kernel1d.hpp"

using namespace pwconc;
using namespace pwconc::kernel1d;

namespace {

constexpr double kPi = std::numbers::pi;

// ghat by adaptive Gauss-Kronrod on unit subintervals, independent of the
// composite rule used in the library.
double g_hat_oracle(double tau, double t) {
  using boost::math::quadrature::gauss_kronrod;
  const int pieces = static_cast<int>(std::ceil(2.0 * (tau + 1.0 + std::abs(t)))) + 2;
  double total = 0.0;
  for (int i = 0; i < pieces; ++i) {
    const double a = static_cast<double>(i) / pieces;
    const double b = static_cast<double>(i + 1) / pieces;
    total += gauss_kronrod<double, 61>::integrate(
        [&](double x) { return eval_g(tau, x) * std::cos(2.0 * kPi * x * t); }, a, b, 8, 1e-13);
  }
  return 2.0 * total;
}

double sinc_pi_sq(double u) {
  if (u == 0.0) return 1.0;
  const double s = std::sin(kPi * u) / (kPi * u);
  return s * s;
}

}  // namespace

TEST_CASE("kernel params validate their domain") {
  CHECK_THROWS_AS(KernelParams1D(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(KernelParams1D(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(KernelParams1D(std::nan(""), 1.0), DomainError);
  CHECK(KernelParams1D(4.0, 0.5).scaled_tau() == 1.0);
}

TEST_CASE("g_tau values") {
  CHECK(eval_g(4.0, 0.0) == 9.0);
  CHECK(eval_g(0.0, 0.0) == 1.0);
  CHECK(eval_g(4.0, 1.0) == 0.0);
  CHECK(eval_g(4.0, -1.2) == 0.0);
  CHECK(eval_g(2.0, 0.3) == eval_g(2.0, -0.3));
  const double x = 0.37;
  const double tau = 1.5;
  const double direct = (1 - x) * std::sin(kPi * (2 * tau + 1) * x) * std::sin(kPi * x) /
                        (kPi * x * kPi * x);
  CHECK(eval_g(tau, x) == doctest::Approx(direct).epsilon(1e-14));
  CHECK_THROWS_AS(eval_g(-0.1, 0.0), DomainError);
}

TEST_CASE("ghat agrees with frozen 30-digit values") {
  // mpmath quadrature at 30 digits
  CHECK(std::abs(eval_g_hat(0.0, 0.0) - 0.655837406485961814645571350311) < 1e-13);
  CHECK(std::abs(eval_g_hat(1.0, 1.0) - 0.807223488841506785827354471337) < 1e-13);
  CHECK(std::abs(eval_g_hat(4.0, 4.0) - 0.821947589506876993163923623764) < 1e-13);
  CHECK(std::abs(eval_g_hat(4.0, 1.3) - 0.97532861518026858527256594208) < 1e-13);
  CHECK(std::abs(eval_g_hat(0.25, 0.7) - 0.501684469904444019972580635255) < 1e-13);
}

TEST_CASE("ghat agrees with adaptive Gauss-Kronrod") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> utau(0.0, 6.0);
  std::uniform_real_distribution<double> ut(-8.0, 8.0);
  for (int i = 0; i < 25; ++i) {
    const double tau = utau(rng);
    const double t = ut(rng);
    CHECK(std::abs(eval_g_hat(tau, t) - g_hat_oracle(tau, t)) < 1e-12);
  }
}

TEST_CASE("ghat is even and converged under panel doubling") {
  for (double tau : {0.0, 0.5, 3.0}) {
    for (double t : {0.2, 1.7, 4.4}) {
      CHECK(eval_g_hat(tau, t) == doctest::Approx(eval_g_hat(tau, -t)).epsilon(1e-15));
      const int p = g_hat_panels(tau, t);
      CHECK(std::abs(eval_g_hat_with_panels(tau, t, p) - eval_g_hat_with_panels(tau, t, 2 * p)) <
            1e-14);
    }
  }
}

TEST_CASE("closed-form derivatives match finite differences") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> utau(0.25, 4.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double tau = utau(rng);
    const double t = unit(rng) * (tau + 1.2);
    const double h = 1e-3;
    auto d1 = [&](double s) { return (eval_g_hat(tau, t + s) - eval_g_hat(tau, t - s)) / (2 * s); };
    auto d2 = [&](double s) {
      return (eval_g_hat(tau, t + s) - 2 * eval_g_hat(tau, t) + eval_g_hat(tau, t - s)) / (s * s);
    };
    CHECK(std::abs((4 * d1(h) - d1(2 * h)) / 3 - g_hat_derivative(tau, t)) < 1e-9);
    CHECK(std::abs((4 * d2(h) - d2(2 * h)) / 3 - g_hat_second_derivative(tau, t)) < 1e-7);
    auto d3 = [&](double s) {
      return (g_hat_second_derivative(tau, t + s) - g_hat_second_derivative(tau, t - s)) / (2 * s);
    };
    CHECK(std::abs((4 * d3(h) - d3(2 * h)) / 3 - g_hat_third_derivative(tau, t)) < 1e-8);
  }
}

TEST_CASE("second derivative is the signed sum of four squared sincs") {
  const double tau = 1.3;
  const double t = 0.45;
  const double expected = sinc_pi_sq(t - tau - 1) + sinc_pi_sq(t + tau + 1) -
                          sinc_pi_sq(t - tau) - sinc_pi_sq(t + tau);
  CHECK(g_hat_second_derivative(tau, t) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("rational rearrangement equals pi^2 times the second derivative") {
  for (double tau : {0.3, 1.7, 2.2}) {
    for (double t : {-1.1, 0.05, 0.9}) {
      const double closed = g_hat_second_derivative(tau, t);
      CHECK(g_hat_second_derivative_rational_form(tau, t) ==
            doctest::Approx(kPi * kPi * closed).epsilon(1e-11));
    }
  }
  // removable points
  CHECK(std::isfinite(g_hat_second_derivative_rational_form(1.0, 1.0)));
  CHECK(g_hat_second_derivative_rational_form(0.5, 1.5) ==
        doctest::Approx(kPi * kPi * g_hat_second_derivative(0.5, 1.5)).epsilon(1e-8));
}

TEST_CASE("second derivative is negative inside the band except at lattice points") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> utau(0.25, 4.0);
  for (int i = 0; i < 8; ++i) {
    const double tau = utau(rng);
    for (int k = 0; k <= 300; ++k) {
      const double t = -(tau + 0.499) + 2 * (tau + 0.499) * k / 300.0;
      CHECK(g_hat_second_derivative(tau, t) < 0.0);
    }
  }
  // t - tau and t + tau both integers
  CHECK(std::abs(g_hat_second_derivative(1.0, 0.0)) < 1e-16);
  CHECK(std::abs(g_hat_second_derivative(2.0, 1.0)) < 1e-16);
}

TEST_CASE("sin^2 u / u^2 integral agrees with quadrature") {
  using boost::math::quadrature::gauss_kronrod;
  auto f = [](double u) {
    if (u == 0.0) return 1.0;
    const double s = std::sin(u) / u;
    return s * s;
  };
  for (auto [a, b] : {std::pair{0.0, 1.0}, {0.5, 7.0}, {-3.0, 2.0}, {10.0, 30.0}}) {
    const double ref = gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-15);
    CHECK(std::abs(sinc_squared_integral(a, b) - ref) < 1e-13);
  }
}

TEST_CASE("partials identity holds with pi limits and a 2/pi factor") {
  for (double tau : {0.25, 1.0, 2.5, 4.0}) {
    for (double frac : {-1.0, -0.3, 0.0, 0.6, 1.0}) {
      const PartialsResidual r = partials_identity_residual(tau, frac * tau);
      CHECK(std::abs(r.residual_pi) < 1e-8);
    }
  }
  const PartialsResidual r = partials_identity_residual(1.0, 0.0);
  CHECK(std::abs(r.residual_2pi) > 1e-3);
}

TEST_CASE("inverse coefficients alternate and sum to the total variation") {
  for (auto [tau, delta] : {std::pair{1.0, 0.5}, {2.0, 1.0}, {4.0, 0.1}, {0.5, 3.0}}) {
    const KernelParams1D p(tau, delta);
    const AtomicMeasure m = inverse_coeffs(p, std::max(64, default_n_max(p)));
    CHECK(m.spacing == doctest::Approx(1.0 / (2.0 * tau)));
    CHECK(m.sign_violation() == 0.0);
    for (int n = -m.n_max; n <= m.n_max; ++n) {
      CHECK(m.weight(n) == m.weight(-n));
      CHECK((n % 2 == 0 ? m.weight(n) : -m.weight(n)) >= 0.0);
    }
    CHECK(m.alternating_sum_truncated() == doctest::Approx(m.abs_sum_truncated()).epsilon(1e-14));
    CHECK(std::abs(m.alternating_sum() - total_variation(p)) < 1e-8);
    // the tail is what the truncation leaves out
    CHECK(m.tail_bound > 0.0);
    CHECK(m.tail_bound < 1e-2);
  }
}

TEST_CASE("inverse coefficients match an adaptive quadrature of 1/ghat") {
  using boost::math::quadrature::gauss_kronrod;
  const KernelParams1D p(2.0, 0.75);
  const double s = p.scaled_tau();
  const AtomicMeasure m = inverse_coeffs(p, 64);
  for (int n : {0, 1, 2, 5, 17, 40}) {
    const double ref =
        gauss_kronrod<double, 31>::integrate(
            [&](double u) { return std::cos(kPi * n * u / s) / eval_g_hat(s, u); }, 0.0, s, 10,
            1e-14) /
        s;
    CHECK(std::abs(m.weight(n) - ref) < 1e-12);
  }
}

TEST_CASE("truncation tail estimate predicts the missing mass") {
  const KernelParams1D p(1.0, 1.0);
  const AtomicMeasure small = inverse_coeffs(p, 64);
  const AtomicMeasure large = inverse_coeffs(p, 512);
  const double missing = large.abs_sum_truncated() - small.abs_sum_truncated();
  CHECK(std::abs(missing + large.tail_bound - small.tail_bound) < 1e-9);
}

TEST_CASE("concentration constant factors") {
  const KernelParams1D p(4.0, 1.0);
  const ConcentrationBound1D b = concentration_constant(p);
  CHECK(b.sup_norm_g == 10.0);
  CHECK(b.inv_norm == doctest::Approx(1.0 / eval_g_hat(2.0, 2.0)).epsilon(1e-15));
  CHECK(b.constant == doctest::Approx(b.sup_norm_g * b.inv_norm));
  CHECK(b.abs_threshold == doctest::Approx(1.0 / (2.0 * b.constant)));
  CHECK(b.ratio <= 2.5);
  REQUIRE(b.within_5_2.has_value());
  CHECK(*b.within_5_2);
  CHECK_FALSE(concentration_constant(KernelParams1D(1.0, 1.0)).within_5_2.has_value());
}

TEST_CASE("ratio depends on tau delta only and stays below 80/13") {
  for (double product : {1e-3, 0.1, 1.0, 2.0, 30.0}) {
    const double r1 = concentration_constant(KernelParams1D(0.5, product / 0.5)).ratio;
    const double r2 = concentration_constant(KernelParams1D(7.0, product / 7.0)).ratio;
    CHECK(r1 == doctest::Approx(r2).epsilon(1e-12));
    CHECK(r1 <= 80.0 / 13.0);
  }
}

TEST_CASE("diagonal value of ghat tends to one half plus half of ghat_0(0)") {
  const double limit = 0.827918703242980907322785675156;
  CHECK(std::abs(eval_g_hat(200.0, 200.0) - limit) < 2e-3);
  CHECK(std::abs(eval_g_hat(500.0, 500.0) - limit) < 1e-3);
  CHECK(total_variation(KernelParams1D(20.0, 1.0)) ==
        doctest::Approx(1.0 / eval_g_hat(10.0, 10.0)).epsilon(1e-14));
}

TEST_CASE("indicator window constant and thresholds") {
  CHECK(donoho_logan_constant(0.5, 1.0) == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(donoho_logan_constant(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(density_threshold_1d(KernelParams1D(2.0, 1.0), Kernel::indicator), DomainError);
  const KernelParams1D p(0.25, 1.0);
  CHECK(density_threshold_1d(p, Kernel::indicator) ==
        doctest::Approx(std::sin(kPi * 0.25) / (2.0 * kPi * 0.25)));
  CHECK(density_threshold_1d(p, Kernel::tapered) ==
        doctest::Approx(concentration_constant(p).rel_threshold));
}
