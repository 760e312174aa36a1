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
#include <limits>
#include <random>

#include "core/recovery.hpp"
#include "core/simplex.hpp"

using namespace pwconc;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// min c^T x, A x = b, x >= 0 with slack columns appended.
lp::Problem with_slacks(const MatrixXd& a, const VectorXd& b, const VectorXd& c) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  lp::Problem p;
  p.a = MatrixXd::Zero(m, n + m);
  p.a.leftCols(n) = a;
  p.a.rightCols(m) = MatrixXd::Identity(m, m);
  p.b = b;
  p.c = VectorXd::Zero(n + m);
  p.c.head(n) = c;
  p.lower = VectorXd::Zero(n + m);
  p.upper = VectorXd::Constant(n + m, kInf);
  return p;
}

// Minimizes h sum |y - B c| by trying every interpolating subset of rows;
// some L1 minimizer interpolates `dim` linearly independent rows.
double brute_force_lad(const MatrixXd& basis, const VectorXd& y, double h) {
  const int m = static_cast<int>(basis.rows());
  const int d = static_cast<int>(basis.cols());
  double best = kInf;
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    MatrixXd sub(d, d);
    VectorXd rhs(d);
    for (int i = 0; i < d; ++i) {
      sub.row(i) = basis.row(idx[static_cast<std::size_t>(i)]);
      rhs(i) = y(idx[static_cast<std::size_t>(i)]);
    }
    Eigen::FullPivLU<MatrixXd> lu(sub);
    if (lu.isInvertible()) {
      const VectorXd c = lu.solve(rhs);
      best = std::min(best, h * (y - basis * c).cwiseAbs().sum());
    }
    int k = d - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - d + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int i = k + 1; i < d; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return best;
}

}  // namespace

TEST_CASE("textbook LP reaches its known optimum") {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 has optimum 36 at (2, 6).
  MatrixXd a(3, 2);
  a << 1, 0, 0, 2, 3, 2;
  const VectorXd b = (VectorXd(3) << 4, 12, 18).finished();
  const VectorXd c = (VectorXd(2) << -3, -5).finished();
  const lp::Result r = lp::solve(with_slacks(a, b, c));
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.objective == doctest::Approx(-36.0));
  CHECK(r.x(0) == doctest::Approx(2.0));
  CHECK(r.x(1) == doctest::Approx(6.0));
  CHECK(r.primal_residual < 1e-12);
  // strong duality: b^T y equals the optimum
  CHECK(b.dot(r.duals) == doctest::Approx(-36.0));
}

TEST_CASE("infeasible and unbounded problems are reported") {
  lp::Problem inf;
  inf.a = (MatrixXd(2, 1) << 1, 1).finished();
  inf.b = (VectorXd(2) << 1, 2).finished();
  inf.c = VectorXd::Ones(1);
  inf.lower = VectorXd::Zero(1);
  inf.upper = VectorXd::Constant(1, kInf);
  CHECK(lp::solve(inf).status == lp::Status::infeasible);

  lp::Problem unb;
  unb.a = (MatrixXd(1, 2) << 1, -1).finished();
  unb.b = VectorXd::Zero(1);
  unb.c = (VectorXd(2) << -1, 0).finished();
  unb.lower = VectorXd::Zero(2);
  unb.upper = VectorXd::Constant(2, kInf);
  CHECK(lp::solve(unb).status == lp::Status::unbounded);
  CHECK(std::string(lp::to_string(lp::Status::unbounded)) == "unbounded");
}

TEST_CASE("boxed variables flip between bounds") {
  // max sum x_i s.t. sum x_i - s = 0, 0 <= x_i <= 1, s free: optimum n with x at upper bounds.
  const int n = 7;
  lp::Problem p;
  p.a = MatrixXd::Ones(1, n + 1);
  p.a(0, n) = -1.0;
  p.b = VectorXd::Zero(1);
  p.c = VectorXd::Constant(n + 1, -1.0);
  p.c(n) = 0.0;
  p.lower = VectorXd::Zero(n + 1);
  p.upper = VectorXd::Ones(n + 1);
  p.lower(n) = -kInf;
  p.upper(n) = kInf;
  const lp::Result r = lp::solve(p);
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.objective == doctest::Approx(-n));
  for (int i = 0; i < n; ++i) CHECK(r.x(i) == doctest::Approx(1.0));
}

TEST_CASE("free variables and equality rows") {
  // min |x - 3| written as x - u + v = 3 with u, v >= 0, x free: objective 0.
  lp::Problem p;
  p.a = (MatrixXd(1, 3) << 1, -1, 1).finished();
  p.b = (VectorXd(1) << 3).finished();
  p.c = (VectorXd(3) << 0, 1, 1).finished();
  p.lower = (VectorXd(3) << -kInf, 0, 0).finished();
  p.upper = VectorXd::Constant(3, kInf);
  const lp::Result r = lp::solve(p);
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.objective == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.x(0) == doctest::Approx(3.0));
}

TEST_CASE("random dense LPs satisfy complementary optimality") {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 6;
    const int n = 30;
    lp::Problem p;
    p.a = MatrixXd::NullaryExpr(m, n, [&] { return u(rng); });
    const VectorXd x0 = VectorXd::NullaryExpr(n, [&] { return 0.5 * (u(rng) + 1.0); });
    p.b = p.a * x0;
    p.c = VectorXd::NullaryExpr(n, [&] { return u(rng); });
    p.lower = VectorXd::Zero(n);
    p.upper = VectorXd::Ones(n);
    const lp::Result r = lp::solve(p);
    REQUIRE(r.status == lp::Status::optimal);
    CHECK(r.primal_residual < 1e-10);
    CHECK(r.objective <= p.c.dot(x0) + 1e-10);
    const VectorXd reduced = p.c - p.a.transpose() * r.duals;
    for (int j = 0; j < n; ++j) {
      CHECK(r.x(j) >= -1e-12);
      CHECK(r.x(j) <= 1.0 + 1e-12);
      if (r.x(j) > 1e-9 && r.x(j) < 1.0 - 1e-9) CHECK(std::abs(reduced(j)) < 1e-9);
      if (r.x(j) <= 1e-9) CHECK(reduced(j) >= -1e-9);
      if (r.x(j) >= 1.0 - 1e-9) CHECK(reduced(j) <= 1e-9);
    }
  }
}

TEST_CASE("best L1 fit agrees with subset enumeration") {
  const recovery::BandSpace space(1.0, 1.0 / 16, 1.0);
  REQUIRE(space.dimension() == 3);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> z;
  for (int trial = 0; trial < 5; ++trial) {
    const VectorXd y = VectorXd::NullaryExpr(space.points(), [&] { return z(rng); });
    const recovery::L1Fit fit = recovery::best_l1_approx(y, space);
    const double oracle = brute_force_lad(space.basis(), y, space.step());
    CHECK(fit.objective == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(std::abs(fit.duality_gap) <= 1e-9 * (1 + fit.objective));
    CHECK(fit.dual_residual < 1e-9);
    CHECK(fit.dual_weights.cwiseAbs().maxCoeff() <= 1.0 + 1e-12);
  }
}
