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

#include "core/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "core/errors.hpp"

namespace pwconc::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Rescaling thresholds for Miller's backward recurrence.
constexpr double kBigValue = 1e250;
constexpr double kBigScale = 1e-250;

// The ascending series is used whenever its first term dominates, i.e. when
// (x/2)^2 <= nu + 1, and always below this absolute cutoff.
constexpr double kBesselSeriesCutoff = 1.0;

double bessel_series(double nu, double x) {
  const double half = 0.5 * x;
  const double q = -half * half;
  double term = std::pow(half, nu) / std::tgamma(nu + 1.0);
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    if (std::abs(term) <= kEps * 1e-2 * std::abs(sum)) break;
  }
  return sum;
}

// Sum of (-1)^k (x/2)^(2k) / (2^nu k! Gamma(k + nu + 1)).
double bessel_scaled_series(double nu, double x) {
  const double half = 0.5 * x;
  const double q = -half * half;
  double term = 1.0 / (std::pow(2.0, nu) * std::tgamma(nu + 1.0));
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    if (std::abs(term) <= kEps * 1e-2 * std::abs(sum)) break;
  }
  return sum;
}

// Miller's algorithm: recur J_{nu0+k} downwards from a start index far above
// max(order, x), then normalize. Integer orders use the identity
// J_0 + 2 sum J_{2k} = 1; half-integer orders use the closed forms of
// J_{1/2} and J_{-1/2}.
double bessel_miller(const BesselOrder& order, double x) {
  const int n = order.twice() / 2;
  const bool half = order.is_half_integer();
  const double nu0 = half ? 0.5 : 0.0;

  const double top = std::max<double>(n, std::ceil(x));
  int start = static_cast<int>(top + std::ceil(std::sqrt(160.0 * top))) + 20;
  start += start % 2;

  double next = 0.0;    // order nu0 + k + 1
  double cur = 1e-300;  // order nu0 + k
  double result = 0.0;
  double even_sum = 0.0;
  if (start == n) result = cur;
  for (int k = start; k >= 1; --k) {
    const double prev = 2.0 * (k + nu0) / x * cur - next;
    next = cur;
    cur = prev;
    if (k - 1 == n) result = cur;
    if (!half && (k - 1) % 2 == 0 && k - 1 > 0) even_sum += cur;
    if (std::abs(cur) > kBigValue) {
      cur *= kBigScale;
      next *= kBigScale;
      result *= kBigScale;
      even_sum *= kBigScale;
    }
  }
  // cur now holds order nu0, next holds order nu0 + 1.
  if (!half) {
    const double norm = cur + 2.0 * even_sum;
    return result / norm;
  }
  const double amp = std::sqrt(2.0 / (kPi * x));
  const double s = std::sin(x);
  const double c = std::cos(x);
  if (std::abs(s) >= std::abs(c)) return result * (amp * s / cur);
  const double minus_half = cur / x - next;  // order -1/2
  return result * (amp * c / minus_half);
}

}  // namespace

BesselOrder::BesselOrder(double nu) {
  const double twice = 2.0 * nu;
  if (!(nu >= 0.0) || !std::isfinite(nu) || twice != std::round(twice) || twice > 1e6) {
    throw DomainError("Bessel order must be a non-negative multiple of 1/2, got " +
                      std::to_string(nu));
  }
  nu_ = nu;
  twice_ = static_cast<int>(twice);
}

BesselOrder BesselOrder::half_units(int twice_nu) { return BesselOrder(0.5 * twice_nu); }

double sinc_u(double u) {
  if (std::abs(u) <= kSincTaylorCutoff) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sin(u) / u;
}

double sinc_u_derivative(double u) {
  if (std::abs(u) <= kSincTaylorCutoff) {
    const double u2 = u * u;
    return u * (-1.0 / 3.0 + u2 / 30.0);
  }
  return (u * std::cos(u) - std::sin(u)) / (u * u);
}

double sine_integral(double u) {
  const double x = std::abs(u);
  double si = 0.0;
  if (x == 0.0) return 0.0;
  if (x < kSiSeriesCutoff) {
    // sum (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
    double fact_term = x;  // x^(2k+1)/(2k+1)!
    si = x;
    for (int k = 1; k < 100; ++k) {
      fact_term *= -x * x / ((2.0 * k) * (2.0 * k + 1.0));
      const double term = fact_term / (2.0 * k + 1.0);
      si += term;
      if (std::abs(term) < kEps * 1e-2 * std::abs(si)) break;
    }
  } else {
    // Modified Lentz evaluation of E1(ix); Si(x) = pi/2 + Im(e^{-ix} h).
    constexpr double tiny = 1e-300;
    std::complex<double> b(1.0, x);
    std::complex<double> c(1.0 / tiny, 0.0);
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    bool converged = false;
    for (int i = 2; i < 10000; ++i) {
      const double a = -static_cast<double>((i - 1) * (i - 1));
      b += 2.0;
      d = 1.0 / (a * d + b);
      c = b + a / c;
      const std::complex<double> del = c * d;
      h *= del;
      if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) {
        converged = true;
        break;
      }
    }
    if (!converged) throw NumericalError("sine_integral: continued fraction did not converge");
    h *= std::complex<double>(std::cos(x), -std::sin(x));
    si = 0.5 * kPi + h.imag();
  }
  return u < 0.0 ? -si : si;
}

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma_fn requires a finite positive argument, got " + std::to_string(x));
  }
  return std::tgamma(x);
}

double bessel_j(BesselOrder order, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("bessel_j requires finite x >= 0, got " + std::to_string(x));
  }
  const double nu = order.value();
  if (x == 0.0) return order.twice() == 0 ? 1.0 : 0.0;
  if (x <= kBesselSeriesCutoff || 0.25 * x * x <= nu + 1.0) return bessel_series(nu, x);
  return bessel_miller(order, x);
}

double bessel_j_scaled(BesselOrder order, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("bessel_j_scaled requires finite x >= 0, got " + std::to_string(x));
  }
  const double nu = order.value();
  if (x <= kBesselSeriesCutoff || 0.25 * x * x <= nu + 1.0) return bessel_scaled_series(nu, x);
  return bessel_miller(order, x) / std::pow(x, nu);
}

double bessel_first_zero_estimate(BesselOrder order) {
  const double nu = order.value();
  if (nu < 1.0) {
    // Interpolate between j_0(1) and j_1(1); only used to size the bracket.
    return 2.404825557695773 + nu * (3.831705970207512 - 2.404825557695773);
  }
  const double c = std::cbrt(nu);
  return nu + 1.8557571 * c + 1.033150 / c;
}

double bessel_first_zero_coarse(BesselOrder order) { return (0.5 * order.value() + 0.25) * kPi; }

double bessel_first_zero(BesselOrder order) {
  // J_nu > 0 on (0, max(nu, 0.5)]: j_nu(1) > nu and j_nu(1) > 2.4.
  double lo = std::max(order.value(), 0.5);
  double hi = bessel_first_zero_estimate(order) + 0.5;
  int grow = 0;
  while (bessel_j(order, hi) > 0.0) {
    hi += 0.25;
    if (++grow > 200) throw NumericalError("bessel_first_zero: no sign change found");
  }
  // Walk up from the guaranteed positive point so that the bracket holds the
  // first zero only.
  constexpr double step = 0.25;
  double a = lo;
  while (a + step < hi && bessel_j(order, a + step) > 0.0) a += step;
  double b = std::min(a + step, hi);
  lo = a;
  hi = b;
  for (int it = 0; it < 200 && hi - lo > 4.0 * kEps * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (bessel_j(order, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // One Newton polish step, accepted only if it stays in the bracket.
  const double r = 0.5 * (lo + hi);
  const double nu = order.value();
  const double jr = bessel_j(order, r);
  const double dj = nu / r * jr - bessel_j(BesselOrder::half_units(order.twice() + 2), r);
  if (dj != 0.0) {
    const double polished = r - jr / dj;
    if (polished >= lo && polished <= hi) return polished;
  }
  return r;
}

}  // namespace pwconc::specfun
