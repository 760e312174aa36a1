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

#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "core/errors.hpp"
#include "core/kernelnd.hpp"

using namespace pwconc;
using namespace pwconc::kernelnd;

namespace {

constexpr double kPi = std::numbers::pi;

double transform_oracle(int d, double alpha, double t) {
  const double nu = 0.5 * d;
  return std::pow(alpha, nu) * boost::math::cyl_bessel_j(nu, 2 * kPi * alpha * t) / std::pow(t, nu);
}

double h_oracle_2d(double lambda, double alpha, int n1, int n2) {
  using boost::math::quadrature::gauss_kronrod;
  auto inner = [&](double y) {
    return gauss_kronrod<double, 31>::integrate(
        [&](double x) {
          const double r = std::hypot(x, y);
          const double gh = r == 0.0 ? kPi * alpha * alpha : transform_oracle(2, alpha, r);
          return std::cos(kPi * n1 * x / lambda) * std::cos(kPi * n2 * y / lambda) / gh;
        },
        0.0, lambda, 8, 1e-13);
  };
  return gauss_kronrod<double, 31>::integrate(inner, 0.0, lambda, 8, 1e-13) / (lambda * lambda);
}

}  // namespace

TEST_CASE("parameters and hypothesis") {
  CHECK_THROWS_AS(BallKernelParams(0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(BallKernelParams(2, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(BallKernelParams(2, 1.0, 0.0), DomainError);
  const BallKernelParams p(2, 0.1, 0.3);
  const HypothesisCheck h = check_hypothesis(p);
  CHECK(h.corner_argument == doctest::Approx(2 * kPi * std::sqrt(2.0) * 0.03));
  CHECK(h.first_zero == doctest::Approx(boost::math::cyl_bessel_j_zero(1.0, 1)).epsilon(1e-13));
  CHECK(h.holds);
  CHECK(h.product_form_holds);
  // holds without the 2 pi factor but fails with it
  const HypothesisCheck g = check_hypothesis(BallKernelParams(1, 1.0, 1.0));
  CHECK_FALSE(g.holds);
  CHECK(g.product_form_holds);
  CHECK_THROWS_AS(concentration_constant_nd(BallKernelParams(1, 1.0, 1.0)), DomainError);
}

TEST_CASE("ball volume and transform at the origin") {
  for (int d = 1; d <= 6; ++d) {
    const double alpha = 0.4;
    const double vol = std::pow(kPi, 0.5 * d) * std::pow(alpha, d) / boost::math::tgamma(0.5 * d + 1);
    CHECK(ball_volume(d, alpha) == doctest::Approx(vol).epsilon(1e-14));
    CHECK(ball_transform(d, alpha, 0.0) == doctest::Approx(vol).epsilon(1e-14));
  }
}

TEST_CASE("ball transform matches Boost and closed forms") {
  for (int d = 1; d <= 7; ++d) {
    for (double t : {0.1, 0.8, 2.5, 6.0}) {
      CHECK(ball_transform(d, 0.35, t) ==
            doctest::Approx(transform_oracle(d, 0.35, t)).epsilon(1e-12));
    }
  }
  for (double t : {0.05, 0.5, 3.3}) {
    const double alpha = 0.3;
    CHECK(std::abs(ball_transform(1, alpha, t) - std::sin(2 * kPi * alpha * t) / (kPi * t)) < 1e-14);
    const double u = 2 * kPi * alpha * t;
    const double three = (std::sin(u) - u * std::cos(u)) / (2 * kPi * kPi * t * t * t);
    CHECK(ball_transform(3, alpha, t) == doctest::Approx(three).epsilon(1e-12));
  }
}

TEST_CASE("constant is the reciprocal transform at the corner") {
  const BallKernelParams p(3, 0.2, 0.4);
  const double corner = std::sqrt(3.0) * 0.2;
  CHECK(concentration_constant_nd(p) == doctest::Approx(1.0 / transform_oracle(3, 0.4, corner)));
}

TEST_CASE("H coefficients match nested adaptive quadrature") {
  const BallKernelParams p(2, 1.0, 0.12);
  for (auto [n1, n2] : {std::pair{0, 0}, {1, 0}, {1, 1}, {3, 2}, {5, 0}}) {
    const std::array<int, 2> n{n1, n2};
    const double ours = h_coeff(p, n, default_quad_nodes(std::max(n1, n2)));
    CHECK(std::abs(ours - h_oracle_2d(1.0, 0.12, n1, n2)) < 1e-10);
  }
  const HCoefficientTable table = h_coeff_table(p, 5);
  const std::array<int, 2> n{3, -2};
  const std::array<int, 2> m{-2, 3};
  CHECK(table.at(n) == doctest::Approx(h_oracle_2d(1.0, 0.12, 3, 2)).epsilon(1e-9));
  CHECK(table.at(n) == doctest::Approx(table.at(m)).epsilon(1e-12));
}

TEST_CASE("H coefficients carry the alternating sign pattern") {
  for (int d = 1; d <= 2; ++d) {
    for (double alpha : {0.05, 0.15, 0.25}) {
      const BallKernelParams p(d, 1.0, alpha / std::sqrt(static_cast<double>(d)));
      if (!check_hypothesis(p).holds) continue;
      const HCoefficientTable table = h_coeff_table(p, 6);
      table.for_each([&](std::span<const int> n, double h) {
        int parity = 0;
        for (int k : n) parity += std::abs(k);
        CHECK((parity % 2 == 0 ? h : -h) >= 0.0);
      });
    }
  }
}

TEST_CASE("three-dimensional coefficient and dimension limits") {
  const BallKernelParams p(3, 1.0, 0.1);
  const std::array<int, 3> n{1, 0, 2};
  CHECK(h_coeff(p, n, 24) < 0.0);
  const std::array<int, 2> wrong{1, 0};
  CHECK_THROWS_AS(h_coeff(p, wrong, 24), DomainError);
  CHECK_THROWS_AS(h_coeff_table(p, 2), DomainError);
}

TEST_CASE("truncated absolute sums increase toward the closed form") {
  const BallKernelParams p(2, 1.0, 0.1);
  double previous = 0.0;
  for (int n_max : {2, 4, 8}) {
    const TotalVariationNd tv = total_variation_nd(p, n_max);
    CHECK(tv.truncated_abs_sum > previous);
    CHECK(tv.truncated_abs_sum <= tv.closed_form);
    CHECK(tv.truncated_abs_sum == doctest::Approx(tv.truncated_alternating).epsilon(1e-12));
    previous = tv.truncated_abs_sum;
  }
  const BallKernelParams q(1, 1.0, 0.2);
  const TotalVariationNd tv1 = total_variation_nd(q, 32);
  REQUIRE(tv1.has_tail_estimate);
  CHECK(tv1.gap > 1e-4);
  CHECK(std::abs(tv1.truncated_abs_sum + tv1.tail_estimate - tv1.closed_form) < 1e-6);
}

TEST_CASE("density thresholds") {
  const BallKernelParams p(1, kPi, 1.0 / (4 * kPi * kPi));
  CHECK(density_threshold_ball(p).threshold == doctest::Approx(std::sin(0.5)).epsilon(1e-14));
  const DensityThreshold c = density_threshold_cube(3, 2.0, 0.5);
  CHECK(c.threshold == doctest::Approx(0.5 * std::pow(std::sin(0.5) / 0.5, 3)));
  CHECK_THROWS_AS(density_threshold_cube(2, 10.0, 1.0), DomainError);
}

TEST_CASE("window comparisons") {
  for (Scenario sc : {Scenario::circumscribed, Scenario::equal_volume}) {
    for (int d = 1; d <= 12; ++d) {
      const WindowComparison c = compare_windows(d, sc);
      CHECK(c.ball_hypothesis_holds);
      CHECK(c.cube_exceeds_ball);
      CHECK(c.cube_threshold == doctest::Approx(0.5 * std::pow(std::sin(kPi * c.delta / 2) /
                                                                   (kPi * c.delta / 2),
                                                               d)));
    }
  }
  const WindowComparison e = compare_windows(2, Scenario::equal_volume);
  CHECK(e.alpha == doctest::Approx(e.delta / std::sqrt(kPi)));
  CHECK(ball_volume(2, e.alpha) == doctest::Approx(e.delta * e.delta));
  const WindowComparison circ = compare_windows(4, Scenario::circumscribed);
  CHECK(circ.alpha == doctest::Approx(circ.delta));
  // corner argument is d/2 at the scenario half-width
  CHECK(check_hypothesis(BallKernelParams(4, kPi, circ.alpha)).corner_argument ==
        doctest::Approx(2.0));
  CHECK_FALSE(circ.note.empty());
}

TEST_CASE("circumscribed ball threshold tracks its asymptotic form") {
  double lo = 1e300;
  double hi = 0.0;
  for (int d = 6; d <= 12; ++d) {
    const WindowComparison c = compare_windows(d, Scenario::circumscribed);
    const double r = c.ball_threshold / c.asymptotic_ball;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  CHECK(hi / lo < 2.0);
  // with lambda = 1 the same ratio drifts by a large factor
  const double r1 = compare_windows(1, Scenario::circumscribed, 1.0).ball_threshold /
                    compare_windows(1, Scenario::circumscribed, 1.0).asymptotic_ball;
  const double r12 = compare_windows(12, Scenario::circumscribed, 1.0).ball_threshold /
                     compare_windows(12, Scenario::circumscribed, 1.0).asymptotic_ball;
  CHECK(r12 / r1 > 2.0);
}

TEST_CASE("Laplace kernel is absolutely monotone on its interval") {
  for (int twice : {1, 2, 3, 4}) {
    const specfun::BesselOrder p = specfun::BesselOrder::half_units(twice);
    const double j = specfun::bessel_first_zero(p);
    std::vector<double> grid;
    for (int i = 1; i <= 40; ++i) grid.push_back(0.9 * j * j * i / 40);
    const MonotonicityReport r = absolute_monotonicity_check(p, grid, 6);
    CHECK(r.passed);
    CHECK(r.min_difference.size() == 6);
    CHECK(r.overall_min >= -1e-9);
  }
  const specfun::BesselOrder half(0.5);
  CHECK(laplace_kernel_value(half, 0.0) ==
        doctest::Approx(std::sqrt(kPi / 2)).epsilon(1e-14));
  const std::vector<double> uneven{0.1, 0.2, 0.4, 0.5};
  CHECK_THROWS_AS(absolute_monotonicity_check(half, uneven, 2), DomainError);
  const std::vector<double> beyond{9.0, 10.0, 11.0};
  CHECK_THROWS_AS(absolute_monotonicity_check(half, beyond, 1), DomainError);
  const std::vector<double> short_grid{0.1, 0.2};
  CHECK_THROWS_AS(absolute_monotonicity_check(half, short_grid, 3), DomainError);
}
