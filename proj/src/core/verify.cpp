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

#include "core/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "core/errors.hpp"
#include "core/kernel1d.hpp"
#include "core/kernelnd.hpp"
#include "core/recovery.hpp"
#include "core/specfun.hpp"

namespace pwconc::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

class Sink {
 public:
  explicit Sink(std::string suite, std::vector<Record>& out) : suite_(std::move(suite)), out_(out) {}

  void less(const std::string& check, const std::string& params, double computed, double bound,
            bool claimed = true, const std::string& note = "") {
    add(check, params, computed, "<", bound, 0.0, computed < bound, claimed, note);
  }
  void less_eq(const std::string& check, const std::string& params, double computed, double bound,
               bool claimed = true, const std::string& note = "") {
    add(check, params, computed, "<=", bound, 0.0, computed <= bound, claimed, note);
  }
  void greater(const std::string& check, const std::string& params, double computed, double bound,
               bool claimed = true, const std::string& note = "") {
    add(check, params, computed, ">", bound, 0.0, computed > bound, claimed, note);
  }
  void greater_eq(const std::string& check, const std::string& params, double computed,
                  double bound, bool claimed = true, const std::string& note = "") {
    add(check, params, computed, ">=", bound, 0.0, computed >= bound, claimed, note);
  }
  void near(const std::string& check, const std::string& params, double computed, double target,
            double tol, bool claimed = true, const std::string& note = "") {
    add(check, params, computed, "abs_diff<=", target, tol, std::abs(computed - target) <= tol,
        claimed, note);
  }
  void info(const std::string& check, const std::string& params, double computed,
            const std::string& note = "") {
    add(check, params, computed, "info", std::numeric_limits<double>::quiet_NaN(), 0.0, true,
        false, note);
  }

  // Runs `body`; an exception becomes a failed claimed record.
  void guard(const std::string& check, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(check, "", std::numeric_limits<double>::quiet_NaN(), "error",
          std::numeric_limits<double>::quiet_NaN(), 0.0, false, true, e.what());
    }
  }

 private:
  void add(const std::string& check, const std::string& params, double computed,
           const std::string& relation, double target, double tol, bool pass, bool claimed,
           const std::string& note) {
    Record r;
    r.suite = suite_;
    r.check = check;
    r.params = params;
    r.computed = computed;
    r.relation = relation;
    r.target = target;
    r.tolerance = tol;
    r.pass = pass;
    r.claimed = claimed;
    r.note = note;
    out_.push_back(std::move(r));
  }

  std::string suite_;
  std::vector<Record>& out_;
};

// ---------------------------------------------------------------- specfun

void run_specfun(std::vector<Record>& out) {
  Sink s("specfun", out);
  using specfun::BesselOrder;

  s.guard("bessel_half_integer_closed_forms", [&] {
    double worst_half = 0.0;
    double worst_three = 0.0;
    for (int i = 1; i <= 300; ++i) {
      const double x = 0.1 * i;
      const double j12 = std::sqrt(2.0 / (kPi * x)) * std::sin(x);
      const double j32 = std::sqrt(2.0 / (kPi * x)) * (std::sin(x) / x - std::cos(x));
      worst_half = std::max(worst_half, std::abs(specfun::bessel_j(BesselOrder(0.5), x) - j12));
      worst_three = std::max(worst_three, std::abs(specfun::bessel_j(BesselOrder(1.5), x) - j32));
    }
    s.less_eq("bessel_j_half_closed_form", "x=0.1..30", worst_half, 1e-13);
    s.less_eq("bessel_j_three_halves_closed_form", "x=0.1..30", worst_three, 1e-13);
  });

  s.guard("bessel_first_zeros", [&] {
    const std::array<std::pair<int, double>, 5> known{{{0, 2.404825557695773},
                                                       {1, kPi},
                                                       {2, 3.831705970207512},
                                                       {3, 4.493409457909064},
                                                       {12, 9.936109524217684}}};
    for (const auto& [twice, value] : known) {
      const BesselOrder nu = BesselOrder::half_units(twice);
      const std::string p = "nu=" + fmt(nu.value());
      s.near("bessel_first_zero", p, specfun::bessel_first_zero(nu), value, 1e-10);
      s.info("bessel_first_zero_coarse_gap", p,
             specfun::bessel_first_zero_coarse(nu) - specfun::bessel_first_zero(nu),
             "(nu/2 + 1/4) pi minus the computed zero");
    }
  });

  s.guard("sine_integral", [&] {
    s.near("sine_integral", "x=pi", specfun::sine_integral(kPi), 1.851937051982466, 1e-13);
    s.near("sine_integral", "x=1", specfun::sine_integral(1.0), 0.946083070367183, 1e-13);
    s.near("sine_integral", "x=1e6", specfun::sine_integral(1e6), kPi / 2, 1e-6);
    s.near("sine_integral_odd", "x=3.7",
           specfun::sine_integral(3.7) + specfun::sine_integral(-3.7), 0.0, 1e-15);
  });

  s.guard("sinc_taylor_switch", [&] {
    const double u = specfun::kSincTaylorCutoff;
    const double below = specfun::sinc_u(std::nextafter(u, 0.0));
    const double above = specfun::sinc_u(std::nextafter(u, 1.0));
    s.near("sinc_taylor_continuity", "u=1e-4", below - above, 0.0, 1e-15);
  });

  s.guard("gamma", [&] {
    s.near("gamma_half", "x=0.5", specfun::gamma_fn(0.5), std::sqrt(kPi), 1e-14);
    s.near("gamma_integer", "x=7", specfun::gamma_fn(7.0), 720.0, 1e-10);
  });
}

// ---------------------------------------------------------------- kernel1d

void run_kernel1d(std::vector<Record>& out, std::uint64_t seed) {
  Sink s("kernel1d", out);
  using namespace kernel1d;

  s.guard("ghat_bounds", [&] {
    s.greater("ghat0_bound", "tau=0;t=0", eval_g_hat(0.0, 0.0), 0.65);
    s.greater("ghat1_bound", "tau=1;t=1", eval_g_hat(1.0, 1.0), 0.8);
    s.near("g_at_origin", "tau=4;x=0", eval_g(4.0, 0.0), 9.0, 1e-15);
  });

  s.guard("partials_identity", [&] {
    const PartialsGrid g = partials_grid();
    const std::string p = "grid=5x5;tau=0.25..4;t=-tau..tau";
    s.info("partials_residual_2pi_limits", p, g.max_residual_2pi,
           "integral of sin^2 u/u^2 over [2 pi (t+tau), 2 pi (t+tau+1)]");
    s.info("partials_residual_pi_limits", p, g.max_residual_pi,
           "(2/pi) * integral over [pi (t+tau), pi (t+tau+1)]");
    s.less("partials_identity", p + ";form=" + g.holding_form,
           std::min(g.max_residual_2pi, g.max_residual_pi), 1e-6, true,
           "holding form: " + std::string(g.holding_form == "pi" ? "pi limits with 2/pi factor"
                                                                 : "2 pi limits"));
  });

  s.guard("second_derivative", [&] {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> utau(0.25, 4.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double worst = 0.0;
    double worst_rational = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double tau = utau(rng);
      const double t = unit(rng) * (tau + 0.499);
      const double h = 1e-3;
      auto d2 = [&](double step) {
        return (eval_g_hat(tau, t + step) - 2.0 * eval_g_hat(tau, t) + eval_g_hat(tau, t - step)) /
               (step * step);
      };
      const double fd = (4.0 * d2(h) - d2(2.0 * h)) / 3.0;
      const double closed = g_hat_second_derivative(tau, t);
      worst = std::max(worst, std::abs(fd - closed));
      if (std::abs(closed) > 1e-3) {
        worst_rational = std::max(
            worst_rational, std::abs(g_hat_second_derivative_rational_form(tau, t) / closed -
                                     kPi * kPi));
      }
    }
    s.less_eq("ghat_second_derivative_vs_fd", "points=20;seed=" + std::to_string(seed), worst,
              1e-5);
    s.info("ghat_second_derivative_rational_scale", "points=20",
           worst_rational,
           "max |rational form / closed form - pi^2|: the rational form is pi^2 ghat''");

    std::uniform_real_distribution<double> utau2(0.25, 4.0);
    double highest = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 10; ++i) {
      const double tau = utau2(rng);
      const double edge = tau + 0.499;
      for (int k = 0; k <= 400; ++k) {
        const double t = -edge + 2.0 * edge * k / 400.0;
        highest = std::max(highest, g_hat_second_derivative(tau, t));
      }
    }
    s.less("ghat_second_derivative_negative", "taus=10 random;t=401 grid", highest, 0.0);
    s.info("ghat_second_derivative_integer_point", "tau=1;t=0", g_hat_second_derivative(1.0, 0.0),
           "vanishes where t - tau and t + tau are both integers");
  });

  s.guard("constant_grid", [&] {
    const RatioGrid g = ratio_grid(20);
    const std::string p = "grid=20x20;tau_delta=1e-3..1e3";
    s.less_eq("constant_ratio_80_13", p, g.max_ratio, 80.0 / 13.0);
    s.less_eq("constant_ratio_5_2", p + ";tau_delta>=2", g.max_ratio_large, 2.5);
    s.info("constant_ratio_40_13_margin", p, 40.0 / 13.0 - g.max_ratio,
           "40/13 minus the largest observed ratio (at tau delta = " + fmt(g.argmax_product) + ")");
    const double limit_edge = eval_g_hat(500.0, 500.0);
    s.near("constant_ratio_limit", "tau_delta=1e3", g.ratio_at_1e3, 2.025, 0.025, true,
           "ghat_s(s) at s = 500 is " + fmt(limit_edge) + ", so the ratio 2/ghat_s(s) stays near " +
               fmt(2.0 / limit_edge));
    s.info("inverse_norm_at_tau20", "tau=20;delta=1", total_variation(KernelParams1D(20.0, 1.0)),
           "1/ghat_s(s) at s = 10");
  });

  s.guard("coefficient_measure", [&] {
    const std::array<std::pair<double, double>, 10> pairs{{{0.5, 0.5},
                                                           {1.0, 0.5},
                                                           {1.0, 1.0},
                                                           {2.0, 0.25},
                                                           {2.0, 1.0},
                                                           {3.0, 0.5},
                                                           {4.0, 0.1},
                                                           {4.0, 0.5},
                                                           {0.25, 2.0},
                                                           {5.0, 0.6}}};
    double worst_sign = 0.0;
    double worst_sum = 0.0;
    for (const auto& [tau, delta] : pairs) {
      const KernelParams1D kp(tau, delta);
      const AtomicMeasure m = inverse_coeffs(kp, std::max(64, default_n_max(kp)));
      worst_sign = std::max(worst_sign, m.sign_violation());
      worst_sum = std::max(worst_sum, std::abs(m.alternating_sum() - total_variation(kp)));
    }
    s.less_eq("coefficient_sign_alternation", "pairs=10", worst_sign, 0.0);
    s.less_eq("coefficient_alternating_sum", "pairs=10;n_max>=64", worst_sum, 1e-5);
  });

  s.guard("indicator_window", [&] {
    const KernelParams1D kp(0.5, 1.0);
    s.greater("tapered_vs_indicator_threshold", "tau=0.5;delta=1",
              density_threshold_1d(kp, Kernel::tapered), 0.0);
    s.near("indicator_constant", "tau=0.5;delta=1", donoho_logan_constant(0.5, 1.0), kPi / 2,
           1e-14);
  });
}

// ---------------------------------------------------------------- kernelnd

void run_kernelnd(std::vector<Record>& out) {
  Sink s("kernelnd", out);
  using namespace kernelnd;

  s.guard("h_sign_pattern", [&] {
    for (int d = 1; d <= 2; ++d) {
      const BallKernelParams p(d, 1.0, 0.2 / std::sqrt(static_cast<double>(d)));
      const HCoefficientTable table = h_coeff_table(p, 6);
      double violation = 0.0;
      table.for_each([&](std::span<const int> n, double h) {
        int parity = 0;
        for (int k : n) parity += k;
        const double signed_h = (parity % 2 == 0 ? 1.0 : -1.0) * h;
        violation = std::max(violation, -signed_h);
      });
      s.less_eq("h_sign_pattern", "d=" + std::to_string(d) + ";n_inf<=6;lambda=1;alpha=" +
                                      fmt(p.alpha()),
                violation, 0.0);
    }
  });

  s.guard("h_total_variation", [&] {
    const BallKernelParams p(2, 1.0, 0.1);
    double previous = 0.0;
    double closed = 0.0;
    bool monotone = true;
    double last_gap = 0.0;
    for (int n_max : {2, 4, 8, 16}) {
      const TotalVariationNd tv = total_variation_nd(p, n_max);
      closed = tv.closed_form;
      monotone = monotone && tv.truncated_abs_sum >= previous && tv.truncated_abs_sum <= closed + 1e-9;
      previous = tv.truncated_abs_sum;
      last_gap = tv.gap;
    }
    s.greater_eq("h_abs_sum_monotone", "d=2;lambda=1;alpha=0.1;n_max=2,4,8,16",
                 monotone ? 1.0 : 0.0, 1.0);
    s.info("h_abs_sum_gap", "d=2;n_max=16", last_gap, "closed form " + fmt(closed));

    const BallKernelParams p1(1, 1.0, 0.2);
    const TotalVariationNd tv1 = total_variation_nd(p1, 32);
    s.near("h_abs_sum_with_tail", "d=1;lambda=1;alpha=0.2;n_max=32",
           tv1.truncated_abs_sum + tv1.tail_estimate, tv1.closed_form, 1e-6);
  });

  s.guard("ball_transform_d1", [&] {
    double worst = 0.0;
    for (int i = 1; i <= 200; ++i) {
      const double t = 0.05 * i;
      const double alpha = 0.3;
      worst = std::max(worst, std::abs(ball_transform(1, alpha, t) -
                                       std::sin(2.0 * kPi * alpha * t) / (kPi * t)));
    }
    s.less_eq("ball_transform_d1_reduction", "alpha=0.3;t=0.05..10", worst, 1e-12);
  });

  s.guard("hypothesis_forms", [&] {
    const BallKernelParams p(2, 0.1, 0.3);
    const HypothesisCheck h = check_hypothesis(p);
    s.less("hypothesis_corner_argument", "d=2;lambda=0.1;alpha=0.3", h.corner_argument,
           h.first_zero);
    s.info("hypothesis_product_form", "d=2;lambda=0.1;alpha=0.3", h.product_bound - h.product,
           "alpha lambda < j/sqrt(d) without the 2 pi factor; margin reported only");
    s.info("constant_nd", "d=2;lambda=0.1;alpha=0.3", concentration_constant_nd(p));
  });

  s.guard("laplace_monotonicity", [&] {
    for (int twice : {1, 2, 3}) {
      const specfun::BesselOrder order = specfun::BesselOrder::half_units(twice);
      const double j = specfun::bessel_first_zero(order);
      const double top = 0.9 * j * j;
      std::vector<double> grid;
      const int points = 60;
      for (int i = 1; i <= points; ++i) grid.push_back(top * i / points);
      const MonotonicityReport r = absolute_monotonicity_check(order, grid, 6);
      s.greater_eq("laplace_absolute_monotonicity", "p=" + fmt(order.value()) + ";orders<=6",
                   r.overall_min, -1e-9);
    }
  });

  s.guard("window_comparison", [&] {
    for (Scenario sc : {Scenario::circumscribed, Scenario::equal_volume}) {
      const std::string name = sc == Scenario::circumscribed ? "circumscribed" : "equal_volume";
      int exceed = 0;
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0.0;
      double worst_quote = 0.0;
      for (int d = 1; d <= 12; ++d) {
        const WindowComparison c = compare_windows(d, sc);
        exceed += c.cube_exceeds_ball ? 1 : 0;
        worst_quote = std::max(worst_quote, std::abs(c.quoted_cube - c.cube_threshold));
        if (d >= 6) {
          const double r = c.ball_threshold / c.asymptotic_ball;
          lo = std::min(lo, r);
          hi = std::max(hi, r);
        }
      }
      s.greater_eq("cube_exceeds_ball", "scenario=" + name + ";d=1..12", exceed, 12.0);
      const std::string tp = "scenario=" + name + ";d=6..12;lambda=pi";
      if (sc == Scenario::circumscribed) {
        s.less_eq("ball_tracks_asymptotic", tp, hi / lo, 2.0, true,
                  "max/min of ball threshold over d^(1/6) (2/e)^(d/2)");
      } else {
        s.info("ball_tracks_asymptotic", tp, hi / lo);
      }
      s.info("quoted_cube_deviation", "scenario=" + name + ";d=1..12", worst_quote,
             "max |quoted closed cube expression - exact cube threshold|");
    }
  });

  s.guard("ball_volume", [&] {
    s.near("ball_volume", "d=2;alpha=0.7", ball_volume(2, 0.7), kPi * 0.49, 1e-15);
    s.near("ball_volume", "d=3;alpha=1", ball_volume(3, 1.0), 4.0 * kPi / 3.0, 1e-14);
  });
}

// ---------------------------------------------------------------- recovery

void run_recovery(std::vector<Record>& out, std::uint64_t seed) {
  Sink s("recovery", out);
  using namespace recovery;

  s.guard("sub_threshold_recovery", [&] {
    const kernel1d::KernelParams1D kp(1.0, 0.5);
    const std::array<double, 3> fr{0.25, 0.5, 0.9};
    const std::vector<double> dens = threshold_fractions(kp, fr);
    const std::array<std::uint64_t, 2> seeds{seed, seed + 1};
    const auto reports = logan_experiment(kp, {}, dens, seeds);
    int below = 0;
    int recovered = 0;
    int negative = 0;
    double worst_err = 0.0;
    for (const auto& r : reports) {
      if (!r.error.empty() || !r.below_threshold()) continue;
      ++below;
      recovered += r.recovered ? 1 : 0;
      negative += r.certificate_margin < 0.0 ? 1 : 0;
      worst_err = std::max(worst_err, r.max_coeff_error);
    }
    const std::string p = "tau=1;delta=0.5;fractions=0.25,0.5,0.9;seeds=2";
    s.greater_eq("sub_threshold_runs", p, below, static_cast<double>(reports.size()));
    s.greater_eq("sub_threshold_recovered", p, recovered, below);
    s.greater_eq("sub_threshold_negative_margin", p, negative, below);
    s.less_eq("sub_threshold_coeff_error", p, worst_err, kRecoveryTol);
  });

  s.guard("noise_free", [&] {
    const kernel1d::KernelParams1D kp(2.0, 0.25);
    const std::array<double, 1> dens{0.0};
    const std::array<std::uint64_t, 1> seeds{seed};
    const auto reports = logan_experiment(kp, {}, dens, seeds);
    s.less_eq("noise_free_coeff_error", "tau=2;delta=0.25", reports.at(0).max_coeff_error, 1e-10);
  });

  s.guard("grid_concentration_inequality", [&] {
    const kernel1d::KernelParams1D kp(1.0, 0.5);
    const auto space = make_space(1.0, 0.5, {});
    const double c = kernel1d::concentration_constant(kp).constant;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dens(0.005, 0.15);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const DiscreteSignal g = synth_signal(space, seed * 7919 + i);
      const NoiseSpec n = realize_noise_support(*space, 0.5, dens(rng), seed * 104729 + i);
      const std::vector<int> idx = support_indices(n, *space);
      const double ratio = concentration_ratio(g.coeffs, *space, idx);
      const double bound = c * window_density(n, 0.5, space->period()).abs * 1.02;
      worst = std::max(worst, ratio / bound);
    }
    s.less_eq("grid_concentration_inequality", "tau=1;delta=0.5;pairs=10", worst, 1.0);
  });

  s.guard("window_density_exact", [&] {
    const auto space = make_space(1.0, 0.5, {});
    const NoiseSpec n = realize_noise_support(*space, 0.5, 0.1, seed);
    const WindowDensity w = window_density(n, 0.5, space->period());
    double brute = 0.0;
    const int steps = 4096 * 4;
    for (int k = 0; k < steps; ++k) {
      const double x = space->period() * k / steps;
      double m = 0.0;
      for (const Interval& iv : n.support) {
        for (double shift : {-space->period(), 0.0, space->period()}) {
          m += std::max(0.0, std::min(x + 0.5, iv.end + shift) - std::max(x, iv.start + shift));
        }
      }
      brute = std::max(brute, m);
    }
    s.near("window_density_vs_sampling", "tau=1;delta=0.5;target=0.1", w.abs, brute, 1e-9);
    s.near("window_density_target", "tau=1;delta=0.5;target=0.1", w.rel, 0.1, 0.01);
  });

  s.guard("oracle_agreement", [&] {
    const auto space = make_space(1.0, 0.5, {});
    int disagreements = 0;
    for (int i = 0; i < 4; ++i) {
      const double target = 0.1 + 0.3 * i;
      const NoiseSpec n = realize_noise_support(*space, 0.5, target, seed * 31 + i);
      const Eigen::VectorXd noise = noise_samples(n, *space, 1.0);
      const L1Fit fit = best_l1_approx(noise, *space);
      const bool zero = fit.coeffs.cwiseAbs().maxCoeff() <= kRecoveryTol;
      std::vector<int> sign(static_cast<std::size_t>(space->points()), 0);
      for (int j = 0; j < space->points(); ++j) sign[j] = noise(j) > 0 ? 1 : (noise(j) < 0 ? -1 : 0);
      const double margin = dual_certificate_check(sign, *space).margin;
      if (std::abs(margin) <= kMarginTieTol) continue;
      if (zero != (margin < -kMarginTieTol)) ++disagreements;
    }
    s.less_eq("lp_certificate_agreement", "tau=1;delta=0.5;targets=0.1,0.4,0.7,1.0",
              disagreements, 0.0);
  });
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "specfun") return Suite::specfun;
  if (name == "kernel1d") return Suite::kernel1d;
  if (name == "kernelnd") return Suite::kernelnd;
  if (name == "recovery") return Suite::recovery;
  return std::nullopt;
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::specfun: return "specfun";
    case Suite::kernel1d: return "kernel1d";
    case Suite::kernelnd: return "kernelnd";
    case Suite::recovery: return "recovery";
  }
  return "unknown";
}

PartialsGrid partials_grid() {
  PartialsGrid g;
  for (double tau : {0.25, 1.0, 2.0, 3.0, 4.0}) {
    for (double frac : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      const kernel1d::PartialsResidual r = kernel1d::partials_identity_residual(tau, frac * tau);
      g.max_residual_2pi = std::max(g.max_residual_2pi, std::abs(r.residual_2pi));
      g.max_residual_pi = std::max(g.max_residual_pi, std::abs(r.residual_pi));
      ++g.points;
    }
  }
  g.holding_form = g.max_residual_pi <= g.max_residual_2pi ? "pi" : "2pi";
  return g;
}

RatioGrid ratio_grid(int n) {
  if (n < 2) throw DomainError("ratio_grid: need at least 2 points per axis");
  RatioGrid g;
  for (int i = 0; i < n; ++i) {
    const double tau = std::pow(10.0, -1.0 + 2.0 * i / (n - 1));
    for (int j = 0; j < n; ++j) {
      const double product = std::pow(10.0, -3.0 + 6.0 * j / (n - 1));
      const kernel1d::KernelParams1D kp(tau, product / tau);
      const double ratio = kernel1d::concentration_constant(kp).ratio;
      if (ratio > g.max_ratio) {
        g.max_ratio = ratio;
        g.argmax_product = product;
      }
      if (product >= 2.0) g.max_ratio_large = std::max(g.max_ratio_large, ratio);
      if (j == n - 1) g.ratio_at_1e3 = ratio;
      ++g.points;
    }
  }
  return g;
}

std::vector<Record> run(Suite suite, std::uint64_t seed) {
  std::vector<Record> out;
  if (suite == Suite::all || suite == Suite::specfun) run_specfun(out);
  if (suite == Suite::all || suite == Suite::kernel1d) run_kernel1d(out, seed);
  if (suite == Suite::all || suite == Suite::kernelnd) run_kernelnd(out);
  if (suite == Suite::all || suite == Suite::recovery) run_recovery(out, seed);
  return out;
}

bool claims_hold(const std::vector<Record>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const Record& r) { return !r.claimed || r.pass; });
}

}  // namespace pwconc::verify
