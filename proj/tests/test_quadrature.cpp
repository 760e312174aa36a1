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

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/quadrature.hpp"

using namespace pwconc;

TEST_CASE("20-point rule matches Boost nodes and weights") {
  const quad::Rule& r = quad::default_rule();
  REQUIRE(r.nodes.size() == 20);
  const auto& abs = boost::math::quadrature::gauss<double, 20>::abscissa();
  const auto& wts = boost::math::quadrature::gauss<double, 20>::weights();
  // Boost stores the non-negative half in increasing order.
  for (std::size_t i = 0; i < abs.size(); ++i) {
    const std::size_t hi = 10 + i;
    const std::size_t lo = 9 - i;
    CHECK(r.nodes[hi] == doctest::Approx(abs[i]).epsilon(1e-15));
    CHECK(r.nodes[lo] == doctest::Approx(-abs[i]).epsilon(1e-15));
    CHECK(r.weights[hi] == doctest::Approx(wts[i]).epsilon(1e-14));
    CHECK(r.weights[lo] == doctest::Approx(wts[i]).epsilon(1e-14));
  }
}

TEST_CASE("n-point rule integrates polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 11, 33}) {
    const quad::Rule r = quad::gauss_legendre(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
  CHECK_THROWS_AS(quad::gauss_legendre(0), DomainError);
}

TEST_CASE("composite rule converges on an oscillatory integrand") {
  auto f = [](double x) { return std::cos(40.0 * x) * std::exp(-x); };
  const double exact = (std::exp(-1.0) * (40.0 * std::sin(40.0) - std::cos(40.0)) + 1.0) / 1601.0;
  const double v = quad::composite(f, 0.0, 1.0, 16, quad::default_rule());
  CHECK(std::abs(v - exact) < 1e-15);
  const quad::Rule nodes = quad::composite_nodes(0.0, 2.0, 3, quad::default_rule());
  CHECK(nodes.nodes.size() == 60);
  double wsum = 0.0;
  for (double w : nodes.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
}
