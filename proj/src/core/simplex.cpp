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

#include "core/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "core/errors.hpp"

namespace pwconc::lp {

const char* to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarState { basic, at_lower, at_upper, free_zero };

class Solver {
 public:
  Solver(const Problem& p, const Options& o) : p_(p), opt_(o), m_(p.a.rows()), n_(p.a.cols()) {}

  Result run() {
    Result res;
    init();
    cost_.setZero(n_ + m_);
    cost_.tail(m_).setOnes();
    Status s = iterate(res.iterations);
    res.phase1_iterations = res.iterations;
    if (s == Status::iteration_limit) return finish(res, s, "iteration limit in phase 1");
    const double infeasibility = x_.tail(m_).cwiseAbs().sum();
    const double scale = 1.0 + (m_ > 0 ? p_.b.cwiseAbs().maxCoeff() : 0.0);
    if (infeasibility > opt_.feasibility_tol * scale * std::max<Eigen::Index>(1, m_)) {
      std::ostringstream msg;
      msg << "phase 1 ended with artificial mass " << infeasibility;
      return finish(res, Status::infeasible, msg.str());
    }
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Eigen::Index j = n_ + i;
      upper_(j) = 0.0;
      if (state_[j] != VarState::basic) {
        state_[j] = VarState::at_lower;
        x_(j) = 0.0;
      }
    }
    drive_out_artificials();
    cost_.head(n_) = p_.c;
    cost_.tail(m_).setZero();
    s = iterate(res.iterations);
    const char* msg = s == Status::optimal ? "" : "phase 2 did not reach optimality";
    return finish(res, s, msg);
  }

 private:
  Eigen::VectorXd column(Eigen::Index j) const {
    if (j < n_) return p_.a.col(j);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m_);
    e(j - n_) = art_sign_(j - n_);
    return e;
  }

  void init() {
    const Eigen::Index total = n_ + m_;
    lower_.resize(total);
    upper_.resize(total);
    lower_.head(n_) = p_.lower;
    upper_.head(n_) = p_.upper;
    lower_.tail(m_).setZero();
    upper_.tail(m_).setConstant(kInf);
    x_.setZero(total);
    state_.assign(static_cast<std::size_t>(total), VarState::at_lower);
    for (Eigen::Index j = 0; j < n_; ++j) {
      const bool lo = std::isfinite(lower_(j));
      const bool up = std::isfinite(upper_(j));
      const bool want_upper = static_cast<std::size_t>(j) < opt_.start_at_upper.size() &&
                              opt_.start_at_upper[static_cast<std::size_t>(j)];
      if (lo && (!up || !want_upper)) {
        state_[j] = VarState::at_lower;
        x_(j) = lower_(j);
      } else if (up) {
        state_[j] = VarState::at_upper;
        x_(j) = upper_(j);
      } else {
        state_[j] = VarState::free_zero;
        x_(j) = 0.0;
      }
    }
    const Eigen::VectorXd r = p_.b - p_.a * x_.head(n_);
    art_sign_.resize(m_);
    basis_.resize(static_cast<std::size_t>(m_));
    binv_ = Eigen::MatrixXd::Zero(m_, m_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      art_sign_(i) = r(i) >= 0.0 ? 1.0 : -1.0;
      const Eigen::Index j = n_ + i;
      basis_[i] = j;
      state_[j] = VarState::basic;
      x_(j) = std::abs(r(i));
      binv_(i, i) = art_sign_(i);
    }
  }

  void refactor() {
    Eigen::MatrixXd bm(m_, m_);
    for (Eigen::Index i = 0; i < m_; ++i) bm.col(i) = column(basis_[i]);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(bm);
    binv_ = lu.inverse();
    Eigen::VectorXd rhs = p_.b;
    for (Eigen::Index j = 0; j < n_ + m_; ++j) {
      if (state_[j] != VarState::basic && x_(j) != 0.0) rhs -= column(j) * x_(j);
    }
    const Eigen::VectorXd xb = lu.solve(rhs);
    for (Eigen::Index i = 0; i < m_; ++i) x_(basis_[i]) = xb(i);
  }

  Eigen::VectorXd multipliers() const {
    Eigen::VectorXd cb(m_);
    for (Eigen::Index i = 0; i < m_; ++i) cb(i) = cost_(basis_[i]);
    return binv_.transpose() * cb;
  }

  void pivot(Eigen::Index r, Eigen::Index q, const Eigen::VectorXd& alpha) {
    const double piv = alpha(r);
    binv_.row(r) /= piv;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i != r && alpha(i) != 0.0) binv_.row(i) -= alpha(i) * binv_.row(r);
    }
    basis_[r] = q;
    state_[q] = VarState::basic;
  }

  void drive_out_artificials() {
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      const Eigen::RowVectorXd row = binv_.row(r) * p_.a;
      Eigen::Index best = -1;
      double best_abs = 1e-7;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (state_[j] == VarState::basic || lower_(j) == upper_(j)) continue;
        if (std::abs(row(j)) > best_abs) {
          best_abs = std::abs(row(j));
          best = j;
        }
      }
      if (best < 0) continue;
      const Eigen::Index leaving = basis_[r];
      const Eigen::VectorXd alpha = binv_ * column(best);
      pivot(r, best, alpha);
      state_[leaving] = VarState::at_lower;
      x_(leaving) = 0.0;
    }
    refactor();
  }

  Status iterate(int& iterations) {
    int since_refactor = 0;
    int stall = 0;
    const double cscale = std::max(1.0, cost_.cwiseAbs().maxCoeff());
    const double dtol = opt_.optimality_tol * cscale;
    while (true) {
      if (since_refactor >= opt_.refactor_interval) {
        refactor();
        since_refactor = 0;
      }
      if (iterations >= opt_.max_iterations) return Status::iteration_limit;

      const Eigen::VectorXd y = multipliers();
      const Eigen::VectorXd d_struct = cost_.head(n_) - p_.a.transpose() * y;
      const bool bland = stall > opt_.stall_limit;

      Eigen::Index q = -1;
      double dir = 0.0;
      double best = 0.0;
      for (Eigen::Index j = 0; j < n_ + m_; ++j) {
        const VarState st = state_[j];
        if (st == VarState::basic || lower_(j) == upper_(j)) continue;
        const double dj = j < n_ ? d_struct(j) : cost_(j) - art_sign_(j - n_) * y(j - n_);
        double gain = 0.0;
        double sgn = 0.0;
        if (st == VarState::at_lower && dj < -dtol) {
          gain = -dj;
          sgn = 1.0;
        } else if (st == VarState::at_upper && dj > dtol) {
          gain = dj;
          sgn = -1.0;
        } else if (st == VarState::free_zero && std::abs(dj) > dtol) {
          gain = std::abs(dj);
          sgn = dj < 0.0 ? 1.0 : -1.0;
        }
        if (sgn == 0.0) continue;
        if (bland) {
          q = j;
          dir = sgn;
          break;
        }
        if (gain > best) {
          best = gain;
          q = j;
          dir = sgn;
        }
      }
      if (q < 0) {
        refactor();
        return Status::optimal;
      }

      const Eigen::VectorXd alpha = binv_ * column(q);
      double theta = kInf;
      Eigen::Index leave = -1;
      bool leave_to_upper = false;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (std::abs(alpha(i)) < opt_.pivot_tol) continue;
        const Eigen::Index bj = basis_[i];
        const double dx = -dir * alpha(i);
        double lim = kInf;
        bool to_upper = false;
        if (dx < 0.0 && std::isfinite(lower_(bj))) {
          lim = (x_(bj) - lower_(bj)) / -dx;
        } else if (dx > 0.0 && std::isfinite(upper_(bj))) {
          lim = (upper_(bj) - x_(bj)) / dx;
          to_upper = true;
        }
        lim = std::max(lim, 0.0);
        const bool better =
            lim < theta - 1e-12 ||
            (lim <= theta + 1e-12 && leave >= 0 &&
             (bland ? basis_[i] < basis_[leave] : std::abs(alpha(i)) > std::abs(alpha(leave))));
        if (better) {
          theta = lim;
          leave = i;
          leave_to_upper = to_upper;
        }
      }
      const double range = upper_(q) - lower_(q);
      ++iterations;
      if (std::isfinite(range) && range <= theta) {
        // Bound flip: the entering variable crosses its box without a pivot.
        for (Eigen::Index i = 0; i < m_; ++i) x_(basis_[i]) -= dir * alpha(i) * range;
        x_(q) += dir * range;
        state_[q] = dir > 0.0 ? VarState::at_upper : VarState::at_lower;
        x_(q) = dir > 0.0 ? upper_(q) : lower_(q);
        stall = 0;
        continue;
      }
      if (leave < 0) return Status::unbounded;

      for (Eigen::Index i = 0; i < m_; ++i) x_(basis_[i]) -= dir * alpha(i) * theta;
      x_(q) += dir * theta;
      const Eigen::Index out = basis_[leave];
      pivot(leave, q, alpha);
      state_[out] = leave_to_upper ? VarState::at_upper : VarState::at_lower;
      x_(out) = leave_to_upper ? upper_(out) : lower_(out);
      ++since_refactor;
      stall = theta <= 1e-12 ? stall + 1 : 0;
    }
  }

  Result finish(Result& res, Status s, const std::string& message) {
    res.status = s;
    res.message = message;
    res.x = x_.head(n_);
    res.objective = p_.c.dot(res.x);
    Eigen::VectorXd cb(m_);
    for (Eigen::Index i = 0; i < m_; ++i) cb(i) = basis_[i] < n_ ? p_.c(basis_[i]) : 0.0;
    res.duals = binv_.transpose() * cb;
    res.primal_residual = m_ > 0 ? (p_.a * res.x - p_.b).cwiseAbs().maxCoeff() : 0.0;
    return res;
  }

  const Problem& p_;
  const Options& opt_;
  Eigen::Index m_;
  Eigen::Index n_;
  Eigen::VectorXd lower_, upper_, x_, cost_, art_sign_;
  std::vector<VarState> state_;
  std::vector<Eigen::Index> basis_;
  Eigen::MatrixXd binv_;
};

}  // namespace

Result solve(const Problem& problem, const Options& options) {
  const Eigen::Index m = problem.a.rows();
  const Eigen::Index n = problem.a.cols();
  if (problem.b.size() != m || problem.c.size() != n || problem.lower.size() != n ||
      problem.upper.size() != n) {
    throw DomainError("lp::solve: inconsistent problem dimensions");
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    if (problem.lower(j) > problem.upper(j)) throw DomainError("lp::solve: lower bound above upper");
  }
  Solver solver(problem, options);
  return solver.run();
}

}  // namespace pwconc::lp
