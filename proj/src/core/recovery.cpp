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

#include "core/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "core/errors.hpp"
#include "core/simplex.hpp"

namespace pwconc::recovery {

namespace {

constexpr double kThetaCap = 1e8;

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

constexpr std::uint64_t kSignalStream = 1;
constexpr std::uint64_t kAmplitudeStream = 2;
constexpr std::uint64_t kSupportStream = 3;

double overlap(double a0, double a1, double b0, double b1) {
  return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

}  // namespace

BandSpace::BandSpace(double period, double step, double tau)
    : period_(period), step_(step), tau_(tau) {
  if (!(period > 0.0) || !(step > 0.0) || !(tau > 0.0)) {
    throw ConfigError("band space: period, step and tau must be positive");
  }
  const double ratio = period / step;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
    throw ConfigError("band space: period / step must be a positive integer");
  }
  points_ = static_cast<int>(rounded);
  const double tl = tau * period;
  k_max_ = static_cast<int>(std::floor(tl + 1e-9));
  const int needed = 4 * (2 * static_cast<int>(std::ceil(tl - 1e-9)) + 1);
  if (points_ < needed) {
    std::ostringstream msg;
    msg << "band space: " << points_ << " grid points, oversampling needs at least " << needed;
    throw ConfigError(msg.str());
  }
  basis_.resize(points_, dimension());
  const double w = 2.0 * std::numbers::pi / points_;
  for (int j = 0; j < points_; ++j) {
    basis_(j, 0) = 1.0;
    for (int k = 1; k <= k_max_; ++k) {
      const long long phase = (static_cast<long long>(k) * j) % points_;
      basis_(j, 2 * k - 1) = std::cos(w * static_cast<double>(phase));
      basis_(j, 2 * k) = std::sin(w * static_cast<double>(phase));
    }
  }
}

Eigen::VectorXd BandSpace::synthesize(const Eigen::VectorXd& coeffs) const {
  if (coeffs.size() != dimension()) throw DomainError("synthesize: wrong coefficient count");
  return basis_ * coeffs;
}

double BandSpace::l1_norm(const Eigen::VectorXd& samples) const {
  return step_ * samples.cwiseAbs().sum();
}

DiscreteSignal synth_signal(std::shared_ptr<const BandSpace> space, std::uint64_t seed) {
  std::mt19937_64 rng = make_rng(seed, kSignalStream);
  std::normal_distribution<double> normal(0.0, 1.0);
  DiscreteSignal s;
  s.coeffs.resize(space->dimension());
  for (Eigen::Index i = 0; i < s.coeffs.size(); ++i) s.coeffs(i) = normal(rng);
  const double norm = space->l1_norm(space->synthesize(s.coeffs));
  if (!(norm > 0.0)) throw NumericalError("synth_signal: drew the zero polynomial");
  s.coeffs /= norm;
  s.samples = space->synthesize(s.coeffs);
  const double energy = space->step() * s.samples.squaredNorm();
  double spectral = s.coeffs(0) * s.coeffs(0);
  for (Eigen::Index i = 1; i < s.coeffs.size(); ++i) spectral += 0.5 * s.coeffs(i) * s.coeffs(i);
  spectral *= space->period();
  s.parseval_defect = std::abs(energy - spectral) / energy;
  s.space = std::move(space);
  return s;
}

DiscreteSignal synth_signal(double period, double step, double tau, std::uint64_t seed) {
  return synth_signal(std::make_shared<const BandSpace>(period, step, tau), seed);
}

void validate_noise(const NoiseSpec& noise, double period) {
  double prev_end = 0.0;
  for (std::size_t i = 0; i < noise.support.size(); ++i) {
    const Interval& iv = noise.support[i];
    if (!(iv.start < iv.end)) throw DomainError("noise support: empty or reversed interval");
    if (iv.start < 0.0 || iv.end > period) throw DomainError("noise support: interval outside [0, L)");
    if (i > 0 && iv.start < prev_end) throw DomainError("noise support: intervals overlap or unsorted");
    prev_end = iv.end;
  }
  if (!(noise.amplitude_min > 0.0) || noise.amplitude_max < noise.amplitude_min) {
    throw DomainError("noise: amplitude range must satisfy 0 < min <= max");
  }
}

WindowDensity window_density(const NoiseSpec& noise, double delta, double period) {
  if (!(delta > 0.0) || !(period > 0.0) || delta > period) {
    throw DomainError("window_density: requires 0 < delta <= L");
  }
  validate_noise(noise, period);
  WindowDensity out;
  if (noise.support.empty()) return out;

  std::vector<double> starts;
  starts.reserve(noise.support.size() * 4);
  for (const Interval& iv : noise.support) {
    for (double x : {iv.start, iv.end, iv.start - delta, iv.end - delta}) {
      double r = std::fmod(x, period);
      if (r < 0.0) r += period;
      starts.push_back(r);
    }
  }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  for (double x : starts) {
    double measure = 0.0;
    for (const Interval& iv : noise.support) {
      for (double shift : {-period, 0.0, period}) {
        measure += overlap(x, x + delta, iv.start + shift, iv.end + shift);
      }
    }
    out.abs = std::max(out.abs, measure);
  }
  out.abs = std::min(out.abs, delta);
  out.rel = out.abs / delta;
  return out;
}

std::vector<int> support_indices(const NoiseSpec& noise, const BandSpace& space) {
  std::vector<int> idx;
  const double h = space.step();
  const double eps = 1e-9 * h;
  for (const Interval& iv : noise.support) {
    int j = std::max(0, static_cast<int>(std::ceil((iv.start - eps) / h)));
    for (; j < space.points(); ++j) {
      const double x = space.node(j);
      if (x >= iv.end - eps) break;
      if (x >= iv.start - eps) idx.push_back(j);
    }
  }
  return idx;
}

Eigen::VectorXd noise_samples(const NoiseSpec& noise, const BandSpace& space, double scale) {
  validate_noise(noise, space.period());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(space.points());
  std::mt19937_64 rng = make_rng(noise.seed, kAmplitudeStream);
  std::uniform_real_distribution<double> log_mag(std::log(noise.amplitude_min),
                                                 std::log(noise.amplitude_max));
  std::bernoulli_distribution coin(0.5);
  for (int j : support_indices(noise, space)) {
    const double mag = scale * std::exp(log_mag(rng));
    out(j) = coin(rng) ? mag : -mag;
  }
  return out;
}

NoiseSpec realize_noise_support(const BandSpace& space, double delta, double target,
                                std::uint64_t seed) {
  const double period = space.period();
  if (!(delta > 0.0) || delta > period) throw DomainError("noise support: requires 0 < delta <= L");
  NoiseSpec noise;
  noise.seed = seed;
  if (target >= 1.0) {
    noise.support.push_back({0.0, period});
    return noise;
  }
  const int m = space.points();
  const int w = std::clamp(static_cast<int>(std::lround(delta / space.step())), 1, m);
  const int cap = static_cast<int>(std::floor(target * w + 1e-9));
  if (cap <= 0) return noise;

  std::vector<char> occupied(static_cast<std::size_t>(m), 0);
  std::vector<int> count(static_cast<std::size_t>(m), 0);  // cells in [s, s + w)
  auto wrap = [m](long long i) { return static_cast<int>(((i % m) + m) % m); };
  auto add = [&](int cell, int sign) {
    for (int s = cell - w + 1; s <= cell; ++s) count[wrap(s)] += sign;
  };
  auto max_after = [&](int cell) {
    int best = 0;
    for (int s = cell - w + 1; s <= cell; ++s) best = std::max(best, count[wrap(s)]);
    return best;
  };

  std::mt19937_64 rng = make_rng(seed, kSupportStream);
  std::uniform_int_distribution<int> start_dist(0, m - 1);
  std::uniform_int_distribution<int> len_dist(1, std::max(1, cap / 2));
  const int attempts = 8 * (m / w + 1) + 64;
  for (int a = 0; a < attempts; ++a) {
    const int start = start_dist(rng);
    const int len = len_dist(rng);
    std::vector<int> added;
    bool ok = true;
    for (int i = 0; i < len; ++i) {
      const int cell = wrap(static_cast<long long>(start) + i);
      if (occupied[cell]) continue;
      add(cell, 1);
      added.push_back(cell);
      if (max_after(cell) > cap) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (int cell : added) occupied[cell] = 1;
    } else {
      for (int cell : added) add(cell, -1);
    }
  }

  auto current_max = [&] { return *std::max_element(count.begin(), count.end()); };
  if (current_max() < cap) {
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int cell : order) {
      if (occupied[cell]) continue;
      add(cell, 1);
      if (max_after(cell) > cap) {
        add(cell, -1);
        continue;
      }
      occupied[cell] = 1;
      if (current_max() == cap) break;
    }
  }

  const double h = space.step();
  for (int i = 0; i < m;) {
    if (!occupied[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j < m && occupied[j]) ++j;
    noise.support.push_back({i * h, j == m ? period : j * h});
    i = j;
  }
  return noise;
}

L1Fit best_l1_approx(const Eigen::VectorXd& observed, const BandSpace& space) {
  if (observed.size() != space.points()) {
    throw DomainError("best_l1_approx: observed length does not match the grid");
  }
  const int m = space.points();
  lp::Problem p;
  p.a = space.basis().transpose();
  p.b = Eigen::VectorXd::Zero(space.dimension());
  p.c = -observed;
  p.lower = Eigen::VectorXd::Constant(m, -1.0);
  p.upper = Eigen::VectorXd::Constant(m, 1.0);
  lp::Options opt;
  opt.start_at_upper.resize(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) opt.start_at_upper[j] = observed(j) > 0.0;
  const lp::Result r = lp::solve(p, opt);
  if (r.status != lp::Status::optimal) {
    std::ostringstream msg;
    msg << "best_l1_approx: LP " << lp::to_string(r.status) << " after " << r.iterations
        << " iterations (" << r.phase1_iterations << " in phase 1)";
    if (!r.message.empty()) msg << ": " << r.message;
    throw NumericalError(msg.str());
  }

  L1Fit fit;
  fit.coeffs = -r.duals;
  fit.dual_weights = r.x;
  fit.iterations = r.iterations;
  const double h = space.step();
  const Eigen::VectorXd residual = observed - space.basis() * fit.coeffs;
  fit.objective = h * residual.cwiseAbs().sum();
  fit.dual_objective = h * observed.dot(r.x);
  fit.duality_gap = fit.objective - fit.dual_objective;
  fit.dual_residual = r.primal_residual;
  const double allowed = kGapTol * (1.0 + std::abs(fit.objective));
  if (std::abs(fit.duality_gap) > allowed || fit.dual_residual > kGapTol * m) {
    std::ostringstream msg;
    msg << "best_l1_approx: optimality not certified, gap " << fit.duality_gap << " (allowed "
        << allowed << "), dual residual " << fit.dual_residual << ", " << r.iterations
        << " iterations";
    throw NumericalError(msg.str());
  }
  return fit;
}

double concentration_ratio(const Eigen::VectorXd& g_coeffs, const BandSpace& space,
                           std::span<const int> support) {
  const Eigen::VectorXd g = space.synthesize(g_coeffs);
  const double total = g.cwiseAbs().sum();
  if (!(total > 0.0)) throw DomainError("concentration_ratio: G vanishes on the grid");
  double inside = 0.0;
  for (int j : support) {
    if (j < 0 || j >= space.points()) throw DomainError("concentration_ratio: index off the grid");
    inside += std::abs(g(j));
  }
  return inside / total;
}

CertificateResult dual_certificate_check(std::span<const int> sign, const BandSpace& space) {
  const int m = space.points();
  if (static_cast<int>(sign.size()) != m) {
    throw DomainError("dual_certificate_check: sign vector length does not match the grid");
  }
  const Eigen::MatrixXd& basis = space.basis();
  Eigen::VectorXd target = Eigen::VectorXd::Zero(space.dimension());
  std::vector<int> free_idx;
  int on_support = 0;
  for (int j = 0; j < m; ++j) {
    if (sign[j] == 0) {
      free_idx.push_back(j);
    } else if (sign[j] == 1 || sign[j] == -1) {
      target -= sign[j] * basis.row(j).transpose();
      ++on_support;
    } else {
      throw DomainError("dual_certificate_check: signs must be -1, 0 or 1");
    }
  }
  if (on_support == 0) throw DomainError("dual_certificate_check: N is empty");

  // maximize t subject to sum_{j not in N} phi_j v_j = t * target, |v| <= 1;
  // the smallest feasible sup |w| on the complement is then 1 / t.
  const Eigen::Index nf = static_cast<Eigen::Index>(free_idx.size());
  lp::Problem p;
  p.a.resize(space.dimension(), nf + 1);
  for (Eigen::Index i = 0; i < nf; ++i) p.a.col(i) = basis.row(free_idx[i]).transpose();
  p.a.col(nf) = -target;
  p.b = Eigen::VectorXd::Zero(space.dimension());
  p.c = Eigen::VectorXd::Zero(nf + 1);
  p.c(nf) = -1.0;
  p.lower = Eigen::VectorXd::Constant(nf + 1, -1.0);
  p.upper = Eigen::VectorXd::Constant(nf + 1, 1.0);
  p.lower(nf) = 0.0;
  p.upper(nf) = kThetaCap;
  const lp::Result r = lp::solve(p);
  if (r.status != lp::Status::optimal) {
    std::ostringstream msg;
    msg << "dual_certificate_check: LP " << lp::to_string(r.status) << " after " << r.iterations
        << " iterations";
    throw NumericalError(msg.str());
  }
  const double theta = std::max(0.0, r.x(nf));
  CertificateResult out;
  out.iterations = r.iterations;
  out.complement_sup = theta > 0.0 ? 1.0 / theta : std::numeric_limits<double>::infinity();
  out.margin = (1.0 - theta) / (1.0 + theta);
  return out;
}

std::shared_ptr<const BandSpace> make_space(double tau, double delta, const GridConfig& grid) {
  if (!(tau > 0.0) || !(delta > 0.0)) throw DomainError("make_space: tau and delta must be positive");
  if (grid.cells_per_window < 1) throw ConfigError("make_space: cells_per_window must be >= 1");
  double period = grid.period > 0.0 ? grid.period : std::max(8.0 / tau, delta);
  if (delta > period) throw ConfigError("make_space: window longer than the period");
  const int points = static_cast<int>(std::ceil(grid.cells_per_window * period / delta - 1e-9));
  return std::make_shared<const BandSpace>(period, period / points, tau);
}

std::vector<double> threshold_fractions(const kernel1d::KernelParams1D& params,
                                        std::span<const double> fractions) {
  const double theta = kernel1d::density_threshold_1d(params, kernel1d::Kernel::tapered);
  std::vector<double> out;
  out.reserve(fractions.size());
  for (double f : fractions) out.push_back(f * theta);
  return out;
}

std::vector<ExperimentReport> logan_experiment(const kernel1d::KernelParams1D& params,
                                               const GridConfig& grid,
                                               std::span<const double> densities,
                                               std::span<const std::uint64_t> seeds) {
  const double tau = params.tau();
  const double delta = params.delta();
  const std::shared_ptr<const BandSpace> space = make_space(tau, delta, grid);
  const double threshold = kernel1d::density_threshold_1d(params, kernel1d::Kernel::tapered);

  std::vector<ExperimentReport> reports;
  int run_id = 0;
  for (std::size_t di = 0; di < densities.size(); ++di) {
    for (std::uint64_t seed : seeds) {
      ExperimentReport rep;
      rep.run_id = run_id++;
      rep.tau = tau;
      rep.delta = delta;
      rep.period = space->period();
      rep.step = space->step();
      rep.seed = seed;
      rep.requested_density = densities[di];
      rep.rel_threshold = threshold;
      try {
        const DiscreteSignal f = synth_signal(space, seed);
        const std::uint64_t noise_seed = seed * 1000003ULL + di;
        const NoiseSpec noise = realize_noise_support(*space, delta, densities[di], noise_seed);
        rep.rel_density = window_density(noise, delta, space->period()).rel;
        const Eigen::VectorXd n = noise_samples(noise, *space, f.samples.cwiseAbs().maxCoeff());
        rep.noise_l1 = space->l1_norm(n);

        const L1Fit fit = best_l1_approx(f.samples + n, *space);
        rep.l1_objective = fit.objective;
        rep.duality_gap = fit.duality_gap;
        const double scale = f.coeffs.cwiseAbs().maxCoeff();
        rep.max_coeff_error = (fit.coeffs - f.coeffs).cwiseAbs().maxCoeff() / scale;
        rep.recovered = rep.max_coeff_error <= kRecoveryTol;

        std::vector<int> sign(static_cast<std::size_t>(space->points()), 0);
        for (int j = 0; j < space->points(); ++j) sign[j] = n(j) > 0.0 ? 1 : (n(j) < 0.0 ? -1 : 0);
        if (noise.support.empty()) {
          rep.certificate_margin = -1.0;
        } else {
          rep.certificate_margin = dual_certificate_check(sign, *space).margin;
        }
        rep.indeterminate = std::abs(rep.certificate_margin) <= kMarginTieTol;
      } catch (const Error& e) {
        rep.error = e.what();
        rep.recovered = false;
        rep.certificate_margin = std::numeric_limits<double>::quiet_NaN();
      }
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

}  // namespace pwconc::recovery
