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

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include "pwconc/pwconc.h"

TEST_CASE("version and status strings") {
  CHECK(std::strlen(pwc_version()) > 0);
  CHECK(std::string(pwc_status_string(PWC_OK)) != std::string(pwc_status_string(PWC_ERR_DOMAIN)));
  CHECK(pwc_status_string(static_cast<pwc_status>(42)) != nullptr);
}

TEST_CASE("scalar functions and error reporting") {
  double v = 0.0;
  REQUIRE(pwc_bessel_j(0.5, 1.0, &v) == PWC_OK);
  CHECK(v == doctest::Approx(std::sqrt(2.0 / std::numbers::pi) * std::sin(1.0)));
  REQUIRE(pwc_bessel_first_zero(0.5, &v) == PWC_OK);
  CHECK(v == doctest::Approx(std::numbers::pi));
  REQUIRE(pwc_g(4.0, 0.0, &v) == PWC_OK);
  CHECK(v == doctest::Approx(9.0));
  REQUIRE(pwc_g_hat(0.0, 0.0, &v) == PWC_OK);
  CHECK(v == doctest::Approx(0.6558374064859618).epsilon(1e-12));

  CHECK(pwc_bessel_j(0.3, 1.0, &v) == PWC_ERR_DOMAIN);
  CHECK(std::strlen(pwc_last_error()) > 0);
  CHECK(pwc_sine_integral(1.0, nullptr) == PWC_ERR_NULL);
  CHECK(pwc_g(-1.0, 0.0, &v) == PWC_ERR_DOMAIN);
}

TEST_CASE("one-dimensional constants") {
  pwc_bound1d b;
  REQUIRE(pwc_constant_1d(4.0, 1.0, &b) == PWC_OK);
  CHECK(b.ratio <= 2.5);
  CHECK(b.within_5_2 == 1);
  CHECK(b.within_80_13 == 1);
  REQUIRE(pwc_constant_1d(1.0, 1.0, &b) == PWC_OK);
  CHECK(b.within_5_2 == -1);
  CHECK(b.abs_threshold == doctest::Approx(0.5 / b.constant));
  CHECK(pwc_constant_1d(1.0, 0.0, &b) == PWC_ERR_DOMAIN);

  double th = 0.0;
  REQUIRE(pwc_density_threshold_1d(1.0, 0.5, PWC_KERNEL_INDICATOR, &th) == PWC_OK);
  CHECK(th > 0.0);
  CHECK(pwc_density_threshold_1d(2.0, 0.5, PWC_KERNEL_INDICATOR, &th) == PWC_ERR_DOMAIN);

  pwc_partials p;
  REQUIRE(pwc_partials_residual(1.0, 0.3, &p) == PWC_OK);
  CHECK(p.residual_pi < 1e-9);
}

TEST_CASE("measure handle") {
  pwc_measure* m = nullptr;
  REQUIRE(pwc_inverse_coeffs(2.0, 1.0, 32, &m) == PWC_OK);
  REQUIRE(m != nullptr);
  CHECK(pwc_measure_n_max(m) == 32);
  double w0 = 0.0;
  double w1 = 0.0;
  REQUIRE(pwc_measure_weight(m, 0, &w0) == PWC_OK);
  REQUIRE(pwc_measure_weight(m, -1, &w1) == PWC_OK);
  CHECK(w0 > 0.0);
  CHECK(w1 < 0.0);
  CHECK(pwc_measure_weight(m, 33, &w0) == PWC_ERR_RANGE);
  CHECK(pwc_measure_tail(m) >= 0.0);
  double tv = 0.0;
  pwc_bound1d b;
  REQUIRE(pwc_constant_1d(2.0, 1.0, &b) == PWC_OK);
  tv = b.inv_norm;
  CHECK(pwc_measure_alternating_sum(m) == doctest::Approx(tv).epsilon(1e-8));
  pwc_measure_free(m);
  pwc_measure_free(nullptr);
}

TEST_CASE("d-dimensional entry points") {
  pwc_bound_nd nd;
  REQUIRE(pwc_constant_nd(2, 0.1, 0.3, &nd) == PWC_OK);
  CHECK(nd.hypothesis.holds == 1);
  CHECK(nd.constant > 0.0);
  CHECK(pwc_constant_nd(1, 1.0, 1.0, &nd) == PWC_ERR_DOMAIN);
  CHECK(nd.hypothesis.holds == 0);
  CHECK(nd.hypothesis.product_form_holds == 1);

  const int n[2] = {1, 1};
  double h = 0.0;
  REQUIRE(pwc_h_coeff(2, 1.0, 0.1, n, 0, &h) == PWC_OK);
  CHECK(h > 0.0);
  CHECK(pwc_h_coeff(2, 1.0, 0.1, nullptr, 0, &h) == PWC_ERR_NULL);

  pwc_window_comparison c;
  REQUIRE(pwc_compare_windows(3, PWC_CIRCUMSCRIBED, 0.0, &c) == PWC_OK);
  CHECK(c.cube_exceeds_ball == 1);
  CHECK(c.lambda == doctest::Approx(std::numbers::pi));
  CHECK(std::strlen(c.note) < sizeof(c.note));
  CHECK(pwc_compare_windows(0, PWC_CIRCUMSCRIBED, 0.0, &c) == PWC_ERR_DOMAIN);

  double y[5] = {0.5, 1.0, 1.5, 2.0, 2.5};
  double worst = 0.0;
  REQUIRE(pwc_absolute_monotonicity(0.5, y, 5, 3, &worst) == PWC_OK);
  CHECK(worst >= -1e-9);
}

TEST_CASE("window density and experiment handle") {
  const double starts[2] = {1.0, 1.6};
  const double ends[2] = {1.1, 1.7};
  double a = 0.0;
  double r = 0.0;
  REQUIRE(pwc_window_density(starts, ends, 2, 1.0, 8.0, &a, &r) == PWC_OK);
  CHECK(a == doctest::Approx(0.2));
  CHECK(r == doctest::Approx(0.2));
  REQUIRE(pwc_window_density(nullptr, nullptr, 0, 1.0, 8.0, &a, &r) == PWC_OK);
  CHECK(a == 0.0);
  CHECK(pwc_window_density(starts, ends, 2, 10.0, 8.0, &a, &r) == PWC_ERR_DOMAIN);

  const double densities[2] = {0.0, 0.05};
  const uint64_t seeds[2] = {1, 2};
  pwc_experiment* e = nullptr;
  REQUIRE(pwc_experiment_run(1.0, 0.5, 0.0, 0, densities, 2, seeds, 2, &e) == PWC_OK);
  REQUIRE(pwc_experiment_size(e) == 4);
  for (size_t i = 0; i < 4; ++i) {
    pwc_run run;
    REQUIRE(pwc_experiment_get(e, i, &run) == PWC_OK);
    CHECK(run.run_id == static_cast<int>(i));
    CHECK(run.recovered == 1);
    CHECK(run.below_threshold == 1);
    CHECK(std::string(pwc_experiment_error(e, i)).empty());
  }
  pwc_run run;
  CHECK(pwc_experiment_get(e, 4, &run) == PWC_ERR_RANGE);
  pwc_experiment_free(e);

  CHECK(pwc_experiment_run(4.0, 1.0, 8.0, 2, densities, 2, seeds, 2, &e) == PWC_ERR_CONFIG);
}

TEST_CASE("verification report handle") {
  pwc_report* rep = nullptr;
  REQUIRE(pwc_verify_run("specfun", 0, &rep) == PWC_OK);
  REQUIRE(pwc_report_size(rep) > 0);
  pwc_record rec;
  REQUIRE(pwc_report_get(rep, 0, &rec) == PWC_OK);
  CHECK(std::string(rec.suite) == "specfun");
  CHECK(pwc_report_claims_hold(rep) == 1);
  CHECK(pwc_report_get(rep, pwc_report_size(rep), &rec) == PWC_ERR_RANGE);
  pwc_report_free(rep);
  CHECK(pwc_verify_run("nope", 0, &rep) == PWC_ERR_DOMAIN);
}
