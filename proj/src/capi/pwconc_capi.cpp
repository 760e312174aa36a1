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

#include "pwconc/pwconc.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/kernel1d.hpp"
#include "core/kernelnd.hpp"
#include "core/recovery.hpp"
#include "core/specfun.hpp"
#include "core/verify.hpp"

struct pwc_measure {
  pwconc::kernel1d::AtomicMeasure m;
};

struct pwc_experiment {
  std::vector<pwconc::recovery::ExperimentReport> runs;
};

struct pwc_report {
  std::vector<pwconc::verify::Record> records;
};

namespace {

thread_local std::string g_last_error;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

pwc_status fail(pwc_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
pwc_status guarded(F&& body) {
  try {
    body();
    return PWC_OK;
  } catch (const pwconc::DomainError& e) {
    return fail(PWC_ERR_DOMAIN, e.what());
  } catch (const pwconc::NumericalError& e) {
    return fail(PWC_ERR_NUMERICAL, e.what());
  } catch (const pwconc::InvariantViolation& e) {
    return fail(PWC_ERR_INVARIANT, e.what());
  } catch (const pwconc::ConfigError& e) {
    return fail(PWC_ERR_CONFIG, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PWC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PWC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PWC_ERR_INTERNAL, "unknown exception");
  }
}

#define PWC_REQUIRE(ptr)                                              \
  do {                                                                \
    if ((ptr) == nullptr) return fail(PWC_ERR_NULL, #ptr " is NULL"); \
  } while (0)

void copy_hypothesis(const pwconc::kernelnd::HypothesisCheck& h, pwc_hypothesis* out) {
  out->corner_argument = h.corner_argument;
  out->first_zero = h.first_zero;
  out->holds = h.holds ? 1 : 0;
  out->product = h.product;
  out->product_bound = h.product_bound;
  out->product_form_holds = h.product_form_holds ? 1 : 0;
}

}  // namespace

extern "C" {

const char* pwc_version(void) { return "0.1.0"; }

const char* pwc_status_string(pwc_status status) {
  switch (status) {
    case PWC_OK: return "ok";
    case PWC_ERR_DOMAIN: return "domain error";
    case PWC_ERR_NUMERICAL: return "numerical error";
    case PWC_ERR_INVARIANT: return "invariant violation";
    case PWC_ERR_CONFIG: return "configuration error";
    case PWC_ERR_NULL: return "null argument";
    case PWC_ERR_RANGE: return "index out of range";
    case PWC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pwc_last_error(void) { return g_last_error.c_str(); }

pwc_status pwc_bessel_j(double nu, double x, double* out) {
  PWC_REQUIRE(out);
  return guarded([&] { *out = pwconc::specfun::bessel_j(pwconc::specfun::BesselOrder(nu), x); });
}

pwc_status pwc_bessel_first_zero(double nu, double* out) {
  PWC_REQUIRE(out);
  return guarded(
      [&] { *out = pwconc::specfun::bessel_first_zero(pwconc::specfun::BesselOrder(nu)); });
}

pwc_status pwc_sine_integral(double x, double* out) {
  PWC_REQUIRE(out);
  return guarded([&] { *out = pwconc::specfun::sine_integral(x); });
}

pwc_status pwc_g(double tau, double x, double* out) {
  PWC_REQUIRE(out);
  return guarded([&] { *out = pwconc::kernel1d::eval_g(tau, x); });
}

pwc_status pwc_g_hat(double tau, double t, double* out) {
  PWC_REQUIRE(out);
  return guarded([&] { *out = pwconc::kernel1d::eval_g_hat(tau, t); });
}

pwc_status pwc_g_hat_second_derivative(double tau, double t, double* out) {
  PWC_REQUIRE(out);
  return guarded([&] { *out = pwconc::kernel1d::g_hat_second_derivative(tau, t); });
}

pwc_status pwc_partials_residual(double tau, double t, pwc_partials* out) {
  PWC_REQUIRE(out);
  return guarded([&] {
    const auto r = pwconc::kernel1d::partials_identity_residual(tau, t);
    *out = {r.lhs, r.rhs_2pi, r.rhs_pi, r.residual_2pi, r.residual_pi};
  });
}

pwc_status pwc_constant_1d(double tau, double delta, pwc_bound1d* out) {
  PWC_REQUIRE(out);
  return guarded([&] {
    const auto b =
        pwconc::kernel1d::concentration_constant(pwconc::kernel1d::KernelParams1D(tau, delta));
    out->constant = b.constant;
    out->sup_norm_g = b.sup_norm_g;
    out->inv_norm = b.inv_norm;
    out->abs_threshold = b.abs_threshold;
    out->rel_threshold = b.rel_threshold;
    out->ratio = b.ratio;
    out->within_80_13 = b.within_80_13 ? 1 : 0;
    out->within_5_2 = b.within_5_2 ? (*b.within_5_2 ? 1 : 0) : -1;
  });
}

pwc_status pwc_density_threshold_1d(double tau, double delta, pwc_kernel kernel, double* out) {
  PWC_REQUIRE(out);
  if (kernel != PWC_KERNEL_TAPERED && kernel != PWC_KERNEL_INDICATOR) {
    return fail(PWC_ERR_DOMAIN, "unknown kernel");
  }
  return guarded([&] {
    *out = pwconc::kernel1d::density_threshold_1d(
        pwconc::kernel1d::KernelParams1D(tau, delta),
        kernel == PWC_KERNEL_TAPERED ? pwconc::kernel1d::Kernel::tapered
                                     : pwconc::kernel1d::Kernel::indicator);
  });
}

pwc_status pwc_inverse_coeffs(double tau, double delta, int n_max, pwc_measure** out) {
  PWC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const pwconc::kernel1d::KernelParams1D p(tau, delta);
    const int n = n_max > 0 ? n_max : pwconc::kernel1d::default_n_max(p);
    *out = new pwc_measure{pwconc::kernel1d::inverse_coeffs(p, n)};
  });
}

int pwc_measure_n_max(const pwc_measure* m) { return m ? m->m.n_max : 0; }

double pwc_measure_spacing(const pwc_measure* m) { return m ? m->m.spacing : kNaN; }

pwc_status pwc_measure_weight(const pwc_measure* m, int n, double* out) {
  PWC_REQUIRE(m);
  PWC_REQUIRE(out);
  if (n < -m->m.n_max || n > m->m.n_max) return fail(PWC_ERR_RANGE, "coefficient index out of range");
  *out = m->m.weight(n);
  return PWC_OK;
}

double pwc_measure_alternating_sum(const pwc_measure* m) {
  return m ? m->m.alternating_sum() : kNaN;
}

double pwc_measure_tail(const pwc_measure* m) { return m ? m->m.tail_bound : kNaN; }

void pwc_measure_free(pwc_measure* m) { delete m; }

pwc_status pwc_constant_nd(int d, double lambda, double alpha, pwc_bound_nd* out) {
  PWC_REQUIRE(out);
  return guarded([&] {
    const pwconc::kernelnd::BallKernelParams p(d, lambda, alpha);
    const auto h = pwconc::kernelnd::check_hypothesis(p);
    copy_hypothesis(h, &out->hypothesis);
    out->ball_volume = pwconc::kernelnd::ball_volume(d, alpha);
    out->constant = kNaN;
    out->density_threshold = kNaN;
    out->constant = pwconc::kernelnd::concentration_constant_nd(p);
    out->density_threshold = pwconc::kernelnd::density_threshold_ball(p).threshold;
  });
}

pwc_status pwc_ball_transform(int d, double alpha, double t_norm, double* out) {
  PWC_REQUIRE(out);
  return guarded([&] { *out = pwconc::kernelnd::ball_transform(d, alpha, t_norm); });
}

pwc_status pwc_h_coeff(int d, double lambda, double alpha, const int* n, int quad_nodes,
                       double* out) {
  PWC_REQUIRE(n);
  PWC_REQUIRE(out);
  return guarded([&] {
    const pwconc::kernelnd::BallKernelParams p(d, lambda, alpha);
    std::vector<int> idx(n, n + d);
    int n_inf = 0;
    for (int k : idx) n_inf = std::max(n_inf, std::abs(k));
    const int nodes = quad_nodes > 0 ? quad_nodes : pwconc::kernelnd::default_quad_nodes(n_inf);
    *out = pwconc::kernelnd::h_coeff(p, idx, nodes);
  });
}

pwc_status pwc_compare_windows(int d, pwc_scenario scenario, double lambda,
                               pwc_window_comparison* out) {
  PWC_REQUIRE(out);
  if (scenario != PWC_CIRCUMSCRIBED && scenario != PWC_EQUAL_VOLUME) {
    return fail(PWC_ERR_DOMAIN, "unknown scenario");
  }
  return guarded([&] {
    const auto sc = scenario == PWC_CIRCUMSCRIBED ? pwconc::kernelnd::Scenario::circumscribed
                                                  : pwconc::kernelnd::Scenario::equal_volume;
    const auto c = pwconc::kernelnd::compare_windows(
        d, sc, lambda > 0.0 ? lambda : pwconc::kernelnd::kScenarioLambda);
    out->d = c.d;
    out->lambda = c.lambda;
    out->delta = c.delta;
    out->alpha = c.alpha;
    out->ball_hypothesis_holds = c.ball_hypothesis_holds ? 1 : 0;
    out->cube_hypothesis_holds = c.cube_hypothesis_holds ? 1 : 0;
    out->ball_threshold = c.ball_threshold;
    out->cube_threshold = c.cube_threshold;
    out->asymptotic_ball = c.asymptotic_ball;
    out->quoted_cube = c.quoted_cube;
    out->cube_exceeds_ball = c.cube_exceeds_ball ? 1 : 0;
    std::memset(out->note, 0, sizeof(out->note));
    std::strncpy(out->note, c.note.c_str(), sizeof(out->note) - 1);
  });
}

pwc_status pwc_absolute_monotonicity(double p, const double* y, size_t count, int max_order,
                                     double* overall_min) {
  PWC_REQUIRE(y);
  PWC_REQUIRE(overall_min);
  return guarded([&] {
    const auto r = pwconc::kernelnd::absolute_monotonicity_check(
        pwconc::specfun::BesselOrder(p), std::span<const double>(y, count), max_order);
    *overall_min = r.overall_min;
  });
}

pwc_status pwc_window_density(const double* starts, const double* ends, size_t count,
                              double delta, double period, double* abs_density,
                              double* rel_density) {
  if (count > 0) {
    PWC_REQUIRE(starts);
    PWC_REQUIRE(ends);
  }
  PWC_REQUIRE(abs_density);
  PWC_REQUIRE(rel_density);
  return guarded([&] {
    pwconc::recovery::NoiseSpec noise;
    for (size_t i = 0; i < count; ++i) noise.support.push_back({starts[i], ends[i]});
    const auto w = pwconc::recovery::window_density(noise, delta, period);
    *abs_density = w.abs;
    *rel_density = w.rel;
  });
}

pwc_status pwc_experiment_run(double tau, double delta, double period, int cells_per_window,
                              const double* densities, size_t density_count,
                              const uint64_t* seeds, size_t seed_count, pwc_experiment** out) {
  PWC_REQUIRE(out);
  *out = nullptr;
  if (density_count > 0) PWC_REQUIRE(densities);
  if (seed_count > 0) PWC_REQUIRE(seeds);
  return guarded([&] {
    pwconc::recovery::GridConfig grid;
    if (period > 0.0) grid.period = period;
    if (cells_per_window > 0) grid.cells_per_window = cells_per_window;
    const pwconc::kernel1d::KernelParams1D p(tau, delta);
    auto runs = pwconc::recovery::logan_experiment(
        p, grid, std::span<const double>(densities, density_count),
        std::span<const std::uint64_t>(seeds, seed_count));
    *out = new pwc_experiment{std::move(runs)};
  });
}

size_t pwc_experiment_size(const pwc_experiment* e) { return e ? e->runs.size() : 0; }

pwc_status pwc_experiment_get(const pwc_experiment* e, size_t i, pwc_run* out) {
  PWC_REQUIRE(e);
  PWC_REQUIRE(out);
  if (i >= e->runs.size()) return fail(PWC_ERR_RANGE, "run index out of range");
  const auto& r = e->runs[i];
  out->run_id = r.run_id;
  out->tau = r.tau;
  out->delta = r.delta;
  out->period = r.period;
  out->step = r.step;
  out->seed = r.seed;
  out->requested_density = r.requested_density;
  out->rel_density = r.rel_density;
  out->rel_threshold = r.rel_threshold;
  out->recovered = r.recovered ? 1 : 0;
  out->indeterminate = r.indeterminate ? 1 : 0;
  out->below_threshold = r.below_threshold() ? 1 : 0;
  out->max_coeff_error = r.max_coeff_error;
  out->l1_objective = r.l1_objective;
  out->noise_l1 = r.noise_l1;
  out->duality_gap = r.duality_gap;
  out->certificate_margin = r.certificate_margin;
  return PWC_OK;
}

const char* pwc_experiment_error(const pwc_experiment* e, size_t i) {
  if (!e || i >= e->runs.size()) return "";
  return e->runs[i].error.c_str();
}

void pwc_experiment_free(pwc_experiment* e) { delete e; }

pwc_status pwc_verify_run(const char* suite, uint64_t seed, pwc_report** out) {
  PWC_REQUIRE(suite);
  PWC_REQUIRE(out);
  *out = nullptr;
  const auto s = pwconc::verify::parse_suite(suite);
  if (!s) return fail(PWC_ERR_DOMAIN, "unknown suite (expected all, specfun, kernel1d, kernelnd or recovery)");
  return guarded([&] { *out = new pwc_report{pwconc::verify::run(*s, seed)}; });
}

size_t pwc_report_size(const pwc_report* r) { return r ? r->records.size() : 0; }

pwc_status pwc_report_get(const pwc_report* r, size_t i, pwc_record* out) {
  PWC_REQUIRE(r);
  PWC_REQUIRE(out);
  if (i >= r->records.size()) return fail(PWC_ERR_RANGE, "record index out of range");
  const auto& rec = r->records[i];
  out->suite = rec.suite.c_str();
  out->check = rec.check.c_str();
  out->params = rec.params.c_str();
  out->computed = rec.computed;
  out->relation = rec.relation.c_str();
  out->target = rec.target;
  out->tolerance = rec.tolerance;
  out->pass = rec.pass ? 1 : 0;
  out->claimed = rec.claimed ? 1 : 0;
  out->note = rec.note.c_str();
  return PWC_OK;
}

int pwc_report_claims_hold(const pwc_report* r) {
  return r && pwconc::verify::claims_hold(r->records) ? 1 : 0;
}

void pwc_report_free(pwc_report* r) { delete r; }

}  // extern "C"
