/*
 * Copyright 2026 The pwconc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * pwconc: concentration constants for band-limited L1 signals and exact
 * recovery from sparse noise.
 *
 * Every function returns a pwc_status. On failure the message of the most
 * recent error on the calling thread is available from pwc_last_error().
 * Handles are opaque and must be released with the matching *_free.
 */

#ifndef PWCONC_PWCONC_H
#define PWCONC_PWCONC_H

#include <stddef.h>
#include <stdint.h>

#if defined(PWC_BUILDING_LIBRARY)
#define PWC_API __attribute__((visibility("default")))
#else
#define PWC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pwc_status {
  PWC_OK = 0,
  PWC_ERR_DOMAIN = 1,     /* argument outside the mathematical domain */
  PWC_ERR_NUMERICAL = 2,  /* quadrature or LP could not certify its result */
  PWC_ERR_INVARIANT = 3,  /* a structural property failed to hold */
  PWC_ERR_CONFIG = 4,     /* inconsistent grid or experiment configuration */
  PWC_ERR_NULL = 5,       /* required pointer argument was NULL */
  PWC_ERR_RANGE = 6,      /* index out of range */
  PWC_ERR_INTERNAL = 7
} pwc_status;

PWC_API const char* pwc_version(void);
PWC_API const char* pwc_status_string(pwc_status status);
/* Message for the last failing call on this thread; "" if none. */
PWC_API const char* pwc_last_error(void);

/* ---- special functions ---------------------------------------------- */

/* nu must be a non-negative integer or half-integer. */
PWC_API pwc_status pwc_bessel_j(double nu, double x, double* out);
PWC_API pwc_status pwc_bessel_first_zero(double nu, double* out);
PWC_API pwc_status pwc_sine_integral(double x, double* out);

/* ---- one-dimensional kernel ----------------------------------------- */

PWC_API pwc_status pwc_g(double tau, double x, double* out);
PWC_API pwc_status pwc_g_hat(double tau, double t, double* out);
PWC_API pwc_status pwc_g_hat_second_derivative(double tau, double t, double* out);

typedef struct pwc_partials {
  double lhs;
  double rhs_2pi;
  double rhs_pi;
  double residual_2pi;
  double residual_pi;
} pwc_partials;

PWC_API pwc_status pwc_partials_residual(double tau, double t, pwc_partials* out);

typedef struct pwc_bound1d {
  double constant;
  double sup_norm_g;
  double inv_norm;
  double abs_threshold;
  double rel_threshold;
  double ratio;       /* constant / (tau + 1/delta) */
  int within_80_13;
  int within_5_2;    /* -1 when tau delta < 2 */
} pwc_bound1d;

PWC_API pwc_status pwc_constant_1d(double tau, double delta, pwc_bound1d* out);

typedef enum pwc_kernel { PWC_KERNEL_TAPERED = 0, PWC_KERNEL_INDICATOR = 1 } pwc_kernel;

PWC_API pwc_status pwc_density_threshold_1d(double tau, double delta, pwc_kernel kernel,
                                            double* out);

typedef struct pwc_measure pwc_measure;

/* n_max <= 0 selects ceil(64 (1 + tau delta)). */
PWC_API pwc_status pwc_inverse_coeffs(double tau, double delta, int n_max, pwc_measure** out);
PWC_API int pwc_measure_n_max(const pwc_measure* m);
PWC_API double pwc_measure_spacing(const pwc_measure* m);
PWC_API pwc_status pwc_measure_weight(const pwc_measure* m, int n, double* out);
/* Truncated alternating sum plus the tail estimate. */
PWC_API double pwc_measure_alternating_sum(const pwc_measure* m);
PWC_API double pwc_measure_tail(const pwc_measure* m);
PWC_API void pwc_measure_free(pwc_measure* m);

/* ---- d-dimensional ball window -------------------------------------- */

typedef struct pwc_hypothesis {
  double corner_argument;  /* 2 pi sqrt(d) alpha lambda */
  double first_zero;       /* j_{d/2}(1) */
  int holds;
  double product;          /* alpha lambda */
  double product_bound;    /* j_{d/2}(1) / sqrt(d) */
  int product_form_holds;
} pwc_hypothesis;

typedef struct pwc_bound_nd {
  pwc_hypothesis hypothesis;
  double constant;          /* NaN when the hypothesis fails */
  double ball_volume;
  double density_threshold; /* NaN when the hypothesis fails */
} pwc_bound_nd;

/* Fills out->hypothesis even when it fails; then returns PWC_ERR_DOMAIN. */
PWC_API pwc_status pwc_constant_nd(int d, double lambda, double alpha, pwc_bound_nd* out);
PWC_API pwc_status pwc_ball_transform(int d, double alpha, double t_norm, double* out);
/* n has d entries; quad_nodes <= 0 selects 24 (1 + max |n_j|). d <= 3. */
PWC_API pwc_status pwc_h_coeff(int d, double lambda, double alpha, const int* n, int quad_nodes,
                               double* out);

typedef enum pwc_scenario { PWC_CIRCUMSCRIBED = 0, PWC_EQUAL_VOLUME = 1 } pwc_scenario;

typedef struct pwc_window_comparison {
  int d;
  double lambda;
  double delta;
  double alpha;
  int ball_hypothesis_holds;
  int cube_hypothesis_holds;
  double ball_threshold;
  double cube_threshold;
  double asymptotic_ball;
  double quoted_cube;
  int cube_exceeds_ball;
  char note[256];
} pwc_window_comparison;

/* lambda <= 0 selects pi. */
PWC_API pwc_status pwc_compare_windows(int d, pwc_scenario scenario, double lambda,
                                       pwc_window_comparison* out);

/* Minimum forward difference of orders 1..max_order of y^{p/2}/J_p(sqrt y). */
PWC_API pwc_status pwc_absolute_monotonicity(double p, const double* y, size_t count,
                                             int max_order, double* overall_min);

/* ---- recovery experiments ------------------------------------------- */

PWC_API pwc_status pwc_window_density(const double* starts, const double* ends, size_t count,
                                      double delta, double period, double* abs_density,
                                      double* rel_density);

typedef struct pwc_run {
  int run_id;
  double tau;
  double delta;
  double period;
  double step;
  uint64_t seed;
  double requested_density;
  double rel_density;
  double rel_threshold;
  int recovered;
  int indeterminate;
  int below_threshold;
  double max_coeff_error;
  double l1_objective;
  double noise_l1;
  double duality_gap;
  double certificate_margin;
} pwc_run;

typedef struct pwc_experiment pwc_experiment;

/* period <= 0 selects 8 / tau; cells_per_window <= 0 selects 256. */
PWC_API pwc_status pwc_experiment_run(double tau, double delta, double period,
                                      int cells_per_window, const double* densities,
                                      size_t density_count, const uint64_t* seeds,
                                      size_t seed_count, pwc_experiment** out);
PWC_API size_t pwc_experiment_size(const pwc_experiment* e);
PWC_API pwc_status pwc_experiment_get(const pwc_experiment* e, size_t i, pwc_run* out);
/* "" when run i completed. Valid until the handle is freed. */
PWC_API const char* pwc_experiment_error(const pwc_experiment* e, size_t i);
PWC_API void pwc_experiment_free(pwc_experiment* e);

/* ---- verification suites -------------------------------------------- */

typedef struct pwc_record {
  const char* suite;
  const char* check;
  const char* params;
  double computed;
  const char* relation;
  double target;
  double tolerance;
  int pass;
  int claimed;
  const char* note;
} pwc_record;

typedef struct pwc_report pwc_report;

/* suite is one of "all", "specfun", "kernel1d", "kernelnd", "recovery". */
PWC_API pwc_status pwc_verify_run(const char* suite, uint64_t seed, pwc_report** out);
PWC_API size_t pwc_report_size(const pwc_report* r);
/* String fields stay valid until the report is freed. */
PWC_API pwc_status pwc_report_get(const pwc_report* r, size_t i, pwc_record* out);
PWC_API int pwc_report_claims_hold(const pwc_report* r);
PWC_API void pwc_report_free(pwc_report* r);

#ifdef __cplusplus
}
#endif

#endif /* PWCONC_PWCONC_H */
