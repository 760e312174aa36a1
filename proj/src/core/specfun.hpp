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

#pragma once

// Special functions used by the kernel constructions: sin(u)/u, the sine
// integral, Gamma, Bessel functions of the first kind of integer and
// half-integer order and their first positive zeros.
//
// All functions are pure and thread safe.

namespace pwconc::specfun {

/// Below this |u| the sinc helpers switch to their Taylor expansions.
inline constexpr double kSincTaylorCutoff = 1e-4;

/// Below this x the sine integral is summed from its power series; above it
/// the continued fraction for E1(ix) is used.
inline constexpr double kSiSeriesCutoff = 2.0;

/// Order of a Bessel function. Every order in use is k/2 for integer k >= 0;
/// the constructor rejects anything else.
class BesselOrder {
 public:
  explicit BesselOrder(double nu);
  static BesselOrder half_units(int twice_nu);

  double value() const { return nu_; }
  int twice() const { return twice_; }
  bool is_half_integer() const { return twice_ % 2 != 0; }

 private:
  double nu_ = 0.0;
  int twice_ = 0;
};

/// sin(u)/u, equal to 1 at u = 0.
double sinc_u(double u);

/// d/du [sin(u)/u], equal to 0 at u = 0.
double sinc_u_derivative(double u);

/// Si(u) = integral of sin(w)/w over [0, u]. Odd in u.
double sine_integral(double u);

/// Gamma function for x > 0. Throws DomainError otherwise.
double gamma_fn(double x);

/// J_nu(x) for x >= 0.
double bessel_j(BesselOrder order, double x);

/// J_nu(x) / x^nu, continuous at x = 0 where it equals 1/(2^nu Gamma(nu+1)).
double bessel_j_scaled(BesselOrder order, double x);

/// First positive zero j_nu(1) of J_nu.
double bessel_first_zero(BesselOrder order);

/// Large-order estimate nu + 1.8557571 nu^(1/3) + 1.033150 nu^(-1/3) of j_nu(1),
/// used to place the root bracket.
double bessel_first_zero_estimate(BesselOrder order);

/// The coarse approximation (nu/2 + 1/4) pi, reported next to the computed
/// zeros for comparison. Never used as a result.
double bessel_first_zero_coarse(BesselOrder order);

}  // namespace pwconc::specfun
