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

#include "core/kernelnd.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "core/errors.hpp"
#include "core/kernel1d.hpp"
#include "core/quadrature.hpp"

namespace pwconc::kernelnd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

specfun::BesselOrder half_dim(int d) { return specfun::BesselOrder::half_units(d); }

// 1 / ghat_alpha at radius r, asserting the Bessel argument stays below the
// first zero.
class InverseTransform {
 public:
  explicit InverseTransform(const BallKernelParams& p)
      : order_(half_dim(p.d())),
        alpha_(p.alpha()),
        zero_(specfun::bessel_first_zero(order_)),
        prefactor_(std::pow(2.0 * kPi, 0.5 * p.d()) * std::pow(p.alpha(), p.d())) {}

  double operator()(double r) const {
    const double arg = 2.0 * kPi * alpha_ * r;
    if (!(arg < zero_)) {
      std::ostringstream msg;
      msg << "Bessel argument " << arg << " reached the first zero " << zero_;
      throw InvariantViolation(msg.str());
    }
    const double gh = prefactor_ * specfun::bessel_j_scaled(order_, arg);
    if (!(gh > 0.0)) throw InvariantViolation("ball transform is not positive on the cube");
    return 1.0 / gh;
  }

 private:
  specfun::BesselOrder order_;
  double alpha_;
  double zero_;
  double prefactor_;
};

void require_hypothesis(const BallKernelParams& params, const char* where) {
  const HypothesisCheck h = check_hypothesis(params);
  if (!h.holds) {
    std::ostringstream msg;
    msg << where << ": requires 2 pi sqrt(d) alpha lambda < j_{d/2}(1), got " << h.corner_argument
        << " >= " << h.first_zero;
    throw DomainError(msg.str());
  }
}

// Gauss-Legendre rule mapped to [0, lambda].
quad::Rule axis_rule(double lambda, int nodes) {
  quad::Rule r = quad::gauss_legendre(nodes);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    r.nodes[i] = 0.5 * lambda * (r.nodes[i] + 1.0);
    r.weights[i] *= 0.5 * lambda;
  }
  return r;
}

double h_coeff_raw(const BallKernelParams& params, std::span<const int> n, int nodes) {
  const int d = params.d();
  const double lambda = params.lambda();
  const InverseTransform inv(params);
  const quad::Rule rule = axis_rule(lambda, nodes);
  const std::size_t q = rule.nodes.size();

  // cos(pi n_j x / lambda) along each axis
  std::vector<std::vector<double>> cosines(static_cast<std::size_t>(d), std::vector<double>(q));
  for (int j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < q; ++i) {
      cosines[j][i] = std::cos(kPi * n[static_cast<std::size_t>(j)] * rule.nodes[i] / lambda);
    }
  }

  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  double sum = 0.0;
  while (true) {
    double r2 = 0.0;
    double weight = 1.0;
    for (int j = 0; j < d; ++j) {
      const double x = rule.nodes[idx[j]];
      r2 += x * x;
      weight *= rule.weights[idx[j]] * cosines[j][idx[j]];
    }
    sum += weight * inv(std::sqrt(r2));
    int k = 0;
    while (k < d && idx[k] + 1 == q) {
      idx[k] = 0;
      ++k;
    }
    if (k == d) break;
    ++idx[k];
  }
  // The integrand is even in every coordinate: integral over the cube is
  // 2^d times the integral over [0, lambda]^d.
  return sum / std::pow(lambda, d);
}

}  // namespace

BallKernelParams::BallKernelParams(int d, double lambda, double alpha)
    : d_(d), lambda_(lambda), alpha_(alpha) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be > 0");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be > 0");
}

double BallKernelParams::corner_argument() const {
  return 2.0 * kPi * std::sqrt(static_cast<double>(d_)) * alpha_ * lambda_;
}

HypothesisCheck check_hypothesis(const BallKernelParams& params) {
  HypothesisCheck h;
  h.corner_argument = params.corner_argument();
  h.first_zero = specfun::bessel_first_zero(half_dim(params.d()));
  h.holds = h.corner_argument < h.first_zero;
  h.product = params.alpha() * params.lambda();
  h.product_bound = h.first_zero / std::sqrt(static_cast<double>(params.d()));
  h.product_form_holds = h.product < h.product_bound;
  return h;
}

double ball_volume(int d, double alpha) {
  if (d < 1) throw DomainError("ball_volume: d must be >= 1");
  if (!(alpha > 0.0)) throw DomainError("ball_volume: alpha must be > 0");
  return std::pow(kPi, 0.5 * d) * std::pow(alpha, d) / specfun::gamma_fn(0.5 * d + 1.0);
}

double ball_transform(int d, double alpha, double t_norm) {
  if (d < 1) throw DomainError("ball_transform: d must be >= 1");
  if (!(alpha > 0.0)) throw DomainError("ball_transform: alpha must be > 0");
  if (!(t_norm >= 0.0)) throw DomainError("ball_transform: |t| must be >= 0");
  // alpha^{d/2} J(2 pi alpha t) / t^{d/2} = (2 pi)^{d/2} alpha^d [J(x) / x^{d/2}]
  const double x = 2.0 * kPi * alpha * t_norm;
  return std::pow(2.0 * kPi, 0.5 * d) * std::pow(alpha, d) *
         specfun::bessel_j_scaled(half_dim(d), x);
}

double concentration_constant_nd(const BallKernelParams& params) {
  require_hypothesis(params, "concentration_constant_nd");
  const double gh = ball_transform(params.d(), params.alpha(),
                                   std::sqrt(static_cast<double>(params.d())) * params.lambda());
  return 1.0 / gh;
}

int default_quad_nodes(int n_inf) { return 24 * (1 + n_inf); }

double h_coeff(const BallKernelParams& params, std::span<const int> n, int quad_nodes) {
  if (params.d() > kMaxQuadratureDim) {
    throw DomainError("h_coeff: tensor quadrature is limited to d <= 3");
  }
  if (static_cast<int>(n.size()) != params.d()) {
    throw DomainError("h_coeff: multi-index length must equal d");
  }
  if (quad_nodes < 1) throw DomainError("h_coeff: quad_nodes must be positive");
  require_hypothesis(params, "h_coeff");
  const double coarse = h_coeff_raw(params, n, quad_nodes);
  const double fine = h_coeff_raw(params, n, 2 * quad_nodes);
  if (std::abs(coarse - fine) > 1e-7) {
    std::ostringstream msg;
    msg << "h_coeff: node doubling changed H by " << std::abs(coarse - fine) << " at "
        << quad_nodes << " nodes per axis";
    throw NumericalError(msg.str());
  }
  return fine;
}

HCoefficientTable::HCoefficientTable(int d, int n_max, std::vector<double> values)
    : d_(d), n_max_(n_max), values_(std::move(values)) {}

double HCoefficientTable::at(std::span<const int> n) const {
  std::size_t index = 0;
  for (int j = d_ - 1; j >= 0; --j) {
    const int k = std::abs(n[static_cast<std::size_t>(j)]);
    if (k > n_max_) throw DomainError("HCoefficientTable: index outside the table");
    index = index * static_cast<std::size_t>(n_max_ + 1) + static_cast<std::size_t>(k);
  }
  return values_.at(index);
}

namespace {

// H(n1, n2) for 0 <= n_j <= n_max as a (n_max+1)^d matrix product.
Eigen::MatrixXd h_table_raw(const BallKernelParams& params, int n_max, int nodes) {
  const double lambda = params.lambda();
  const InverseTransform inv(params);
  const quad::Rule rule = axis_rule(lambda, nodes);
  const Eigen::Index q = static_cast<Eigen::Index>(rule.nodes.size());
  Eigen::MatrixXd cw(q, n_max + 1);  // w_i cos(pi n x_i / lambda)
  for (Eigen::Index i = 0; i < q; ++i) {
    for (int n = 0; n <= n_max; ++n) {
      cw(i, n) = rule.weights[i] * std::cos(kPi * n * rule.nodes[i] / lambda);
    }
  }
  if (params.d() == 1) {
    Eigen::VectorXd f(q);
    for (Eigen::Index i = 0; i < q; ++i) f(i) = inv(rule.nodes[i]);
    return (cw.transpose() * f / lambda);
  }
  Eigen::MatrixXd f(q, q);
  for (Eigen::Index i = 0; i < q; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = inv(std::hypot(rule.nodes[i], rule.nodes[j]));
      f(i, j) = v;
      f(j, i) = v;
    }
  }
  return cw.transpose() * f * cw / (lambda * lambda);
}

}  // namespace

HCoefficientTable h_coeff_table(const BallKernelParams& params, int n_max) {
  if (params.d() > 2) throw DomainError("h_coeff_table: only d in {1, 2} is supported");
  if (n_max < 0) throw DomainError("h_coeff_table: n_max must be >= 0");
  require_hypothesis(params, "h_coeff_table");
  const int nodes = default_quad_nodes(n_max);
  const Eigen::MatrixXd coarse = h_table_raw(params, n_max, nodes);
  const Eigen::MatrixXd fine = h_table_raw(params, n_max, 2 * nodes);
  const double change = (coarse - fine).cwiseAbs().maxCoeff();
  if (change > 1e-7) {
    std::ostringstream msg;
    msg << "h_coeff_table: node doubling changed a coefficient by " << change;
    throw NumericalError(msg.str());
  }
  // Column-major storage matches at(): n_1 varies fastest.
  std::vector<double> values(fine.data(), fine.data() + fine.size());
  return HCoefficientTable(params.d(), n_max, std::move(values));
}

TotalVariationNd total_variation_nd(const BallKernelParams& params, int n_max) {
  if (params.d() > 2) throw DomainError("total_variation_nd: the cross-check sum needs d <= 2");
  require_hypothesis(params, "total_variation_nd");
  TotalVariationNd out;
  out.n_max = n_max;
  out.closed_form =
      1.0 / ball_transform(params.d(), params.alpha(),
                           std::sqrt(static_cast<double>(params.d())) * params.lambda());
  const HCoefficientTable table = h_coeff_table(params, n_max);
  table.for_each([&](std::span<const int> n, double h) {
    int parity = 0;
    for (int k : n) parity += k;
    out.truncated_abs_sum += std::abs(h);
    out.truncated_alternating += (parity % 2 == 0 ? 1.0 : -1.0) * h;
  });
  out.gap = out.closed_form - out.truncated_abs_sum;

  if (params.d() == 1) {
    // Endpoint derivatives of f = 1/ghat_alpha at lambda by five-point stencils.
    const InverseTransform inv(params);
    const double lam = params.lambda();
    const double h = 1e-3 * lam;
    const double fp1 = inv(lam + h), fm1 = inv(lam - h);
    const double fp2 = inv(lam + 2 * h), fm2 = inv(lam - 2 * h);
    const double f1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    const double f3 = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
    out.has_tail_estimate = true;
    out.tail_estimate = kernel1d::alternating_tail(lam, f1, f3, n_max);
  }
  return out;
}

DensityThreshold density_threshold_ball(const BallKernelParams& params) {
  require_hypothesis(params, "density_threshold_ball");
  const int d = params.d();
  const double root_d = std::sqrt(static_cast<double>(d));
  const double a = params.alpha();
  const double l = params.lambda();
  DensityThreshold out;
  out.shape = WindowShape::ball;
  out.d = d;
  out.lambda = l;
  out.size = a;
  out.threshold = specfun::gamma_fn(0.5 * d + 1.0) *
                  specfun::bessel_j(half_dim(d), 2.0 * kPi * root_d * a * l) /
                  (2.0 * std::pow(kPi * a * root_d * l, 0.5 * d));
  return out;
}

DensityThreshold density_threshold_cube(int d, double lambda, double delta) {
  if (d < 1) throw DomainError("density_threshold_cube: d must be >= 1");
  if (!(lambda > 0.0) || !(delta > 0.0)) {
    throw DomainError("density_threshold_cube: lambda and delta must be > 0");
  }
  if (!(lambda * delta < 2.0 * kPi)) {
    throw DomainError("density_threshold_cube: requires lambda * delta < 2 pi");
  }
  DensityThreshold out;
  out.shape = WindowShape::cube;
  out.d = d;
  out.lambda = lambda;
  out.size = delta;
  out.threshold = 0.5 * std::pow(specfun::sinc_u(0.5 * lambda * delta), d);
  return out;
}

double scenario_delta(Scenario scenario) {
  switch (scenario) {
    case Scenario::circumscribed:
      return 1.0 / (2.0 * kPi * kPi);
    case Scenario::equal_volume:
      return std::sqrt(2.0 * kPi * std::numbers::e) / (4.0 * kPi * kPi);
  }
  throw DomainError("unknown scenario");
}

WindowComparison compare_windows(int d, Scenario scenario, double lambda) {
  if (d < 1) throw DomainError("compare_windows: d must be >= 1");
  if (!(lambda > 0.0)) throw DomainError("compare_windows: lambda must be > 0");
  WindowComparison c;
  c.d = d;
  c.scenario = scenario;
  c.lambda = lambda;
  c.delta = scenario_delta(scenario);
  const double dd = static_cast<double>(d);
  const double e = std::numbers::e;
  if (scenario == Scenario::circumscribed) {
    c.alpha = c.delta * std::sqrt(dd) / 2.0;
    c.asymptotic_ball = std::pow(dd, 1.0 / 6.0) * std::pow(2.0 / e, 0.5 * dd);
    c.quoted_cube = 0.5 * std::pow(4.0 * kPi * kPi * std::sin(1.0 / (4.0 * kPi * kPi)), dd);
  } else {
    c.alpha = c.delta * std::pow(specfun::gamma_fn(0.5 * dd + 1.0) / std::pow(kPi, 0.5 * dd),
                                 1.0 / dd);
    const double prefactor = std::tgamma(1.0 / 3.0) * std::pow(kPi, 0.25) /
                             (2.0 * std::cbrt(2.0) * std::pow(3.0, 1.0 / 6.0) * kPi);
    c.asymptotic_ball = prefactor * std::pow(2.0 / e, 0.5 * dd) / std::pow(dd, 1.0 / 12.0);
    const double arg = std::sqrt(2.0 * kPi * e) / (8.0 * kPi);
    c.quoted_cube = 0.5 * std::pow(std::sin(arg) / arg, dd);
  }

  std::ostringstream note;
  const BallKernelParams ball(d, lambda, c.alpha);
  const HypothesisCheck h = check_hypothesis(ball);
  c.ball_hypothesis_holds = h.holds;
  c.ball_threshold = h.holds ? density_threshold_ball(ball).threshold : kNaN;
  if (!h.holds) note << "ball hypothesis fails (" << h.corner_argument << " >= " << h.first_zero << ")";

  c.cube_hypothesis_holds = lambda * c.delta < 2.0 * kPi;
  c.cube_threshold = c.cube_hypothesis_holds ? density_threshold_cube(d, lambda, c.delta).threshold : kNaN;
  if (!c.cube_hypothesis_holds) {
    if (!note.str().empty()) note << "; ";
    note << "cube hypothesis fails (lambda delta >= 2 pi)";
  }
  c.cube_exceeds_ball = c.ball_hypothesis_holds && c.cube_hypothesis_holds &&
                        c.cube_threshold > c.ball_threshold;
  if (c.cube_hypothesis_holds && std::abs(c.quoted_cube - c.cube_threshold) > 1e-12) {
    if (!note.str().empty()) note << "; ";
    note << "quoted cube expression differs from exact cube threshold by "
         << c.quoted_cube - c.cube_threshold;
  }
  c.note = note.str();
  return c;
}

double laplace_kernel_value(specfun::BesselOrder p, double y) {
  if (!(y >= 0.0)) throw DomainError("laplace_kernel_value: y must be >= 0");
  const double j = specfun::bessel_first_zero(p);
  if (!(y < j * j)) throw DomainError("laplace_kernel_value: y must be below j_p(1)^2");
  return 1.0 / specfun::bessel_j_scaled(p, std::sqrt(y));
}

MonotonicityReport absolute_monotonicity_check(specfun::BesselOrder p,
                                               std::span<const double> y_grid, int max_order,
                                               double tolerance) {
  if (max_order < 1 || max_order > 8) {
    throw DomainError("absolute_monotonicity_check: max_order must be in [1, 8]");
  }
  const std::size_t m = y_grid.size();
  if (m < static_cast<std::size_t>(max_order) + 1) {
    throw DomainError("absolute_monotonicity_check: grid shorter than max_order + 1");
  }
  const double j = specfun::bessel_first_zero(p);
  const double upper = j * j;
  const double step = y_grid[1] - y_grid[0];
  if (!(step > 0.0)) throw DomainError("absolute_monotonicity_check: grid must increase");
  for (std::size_t i = 0; i < m; ++i) {
    if (!(y_grid[i] > 0.0) || !(y_grid[i] < upper)) {
      throw DomainError("absolute_monotonicity_check: grid must lie inside (0, j_p(1)^2)");
    }
    if (i > 0 && std::abs((y_grid[i] - y_grid[i - 1]) - step) > 1e-9 * std::max(1.0, step)) {
      throw DomainError("absolute_monotonicity_check: grid must be equispaced");
    }
  }

  MonotonicityReport r;
  r.p = p.value();
  r.max_order = max_order;
  r.step = step;
  r.tolerance = tolerance;
  std::vector<double> diff(m);
  for (std::size_t i = 0; i < m; ++i) diff[i] = laplace_kernel_value(p, y_grid[i]);
  r.overall_min = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= max_order; ++k) {
    const std::size_t len = m - static_cast<std::size_t>(k);
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < len; ++i) {
      diff[i] = diff[i + 1] - diff[i];
      lowest = std::min(lowest, diff[i]);
    }
    r.min_difference.push_back(lowest);
    r.overall_min = std::min(r.overall_min, lowest);
  }
  r.passed = r.overall_min >= -tolerance;
  return r;
}

}  // namespace pwconc::kernelnd
