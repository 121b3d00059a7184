// Copyright 2026 The deco Authors
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

#include "deco/quadrature.hpp"
#include "deco/special_functions.hpp"

// Quadrature evaluations of the defining integrals behind the closed-form
// rates. Nothing here calls into the closed forms it is used to check.
namespace deco::oracle {

/// Internal-structure photon statistics at temperature T with lambda = C_V / k_B.
struct PhotonStatistics {
  double temperature = 0.0;  // K
  double lambda_cv = 0.0;
};

/// N(k) = 2 exp[-x - x^2 / (2 lambda)], x = hbar c k / (k_B T).
double photon_number(double wavenumber, const PhotonStatistics& stats);

/// c * int_0^inf k^2 N(k) g(k) sigma(k) dk with g = k^2/pi^2 and
/// sigma = 4 pi Im[(eps-1)/(eps+2)] k r^3. The k range is truncated where the
/// integrand drops below 1e-16 of its peak; the tail bound is folded into the error.
QuadratureResult lambda_em2_integral(double radius, double temperature, const ComplexPermittivity& eps,
                                     double lambda_cv, const QuadratureSpec& spec = kOracleQuadrature);

inline double lambda_em2_numeric(double radius, double temperature, const ComplexPermittivity& eps,
                                 double lambda_cv, const QuadratureSpec& spec = kOracleQuadrature) {
  return lambda_em2_integral(radius, temperature, eps, lambda_cv, spec).value;
}

/// Exact reduction of the emission integral,
///   (4 c r^3 / pi) (k_B T / hbar c)^6 Im[CM] lambda^3
///     * [2(lambda+1)(lambda+8) - sqrt(2 pi lambda)(lambda^2 + 10 lambda + 15) erfcx(sqrt(lambda/2))].
/// Diagnostic only: it explains the closed-form discrepancy report and is
/// never used to produce a rate.
double lambda_em2_exact_reduction(double radius, double temperature, const ComplexPermittivity& eps,
                                  double lambda_cv);

/// Bose-Einstein momentum density of a gas molecule,
/// sqrt(2/pi) / (zeta(3/2) (m k_B T)^{3/2}) * p^2 / (exp(p^2 / (2 m k_B T)) - 1).
double bose_einstein_momentum_pdf(double momentum, double gas_mass, double temperature);

/// int_0^inf p^order nu(p) dp by quadrature; order in {0, 1, 3} (0 is the normalization).
double momentum_moment(int order, double gas_mass, double temperature,
                       const QuadratureSpec& spec = kOracleQuadrature);

/// Analytic values of the same moments: 1, pi sqrt(2 pi)/(3 zeta(3/2)) sqrt(m k_B T),
/// 8 sqrt(2/pi) zeta(3)/zeta(3/2) (m k_B T)^{3/2}.
double momentum_moment_closed_form(int order, double gas_mass, double temperature);

/// Geometric-cross-section collisional localization rate,
/// pi r^2 n / (3 hbar^2 m) <p^3>, with <p^3> taken from quadrature.
double lambda_coll_numeric(double radius, double gas_mass, double number_density, double temperature,
                           const QuadratureSpec& spec = kOracleQuadrature);

}  // namespace deco::oracle
