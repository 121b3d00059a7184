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

#include "deco/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deco/constants.hpp"
#include "deco/errors.hpp"

namespace deco::oracle {

using namespace constants;

namespace {

constexpr double kPeakFraction = 1e-16;

// k^5 N(k), the emission integrand with constant factors pulled out.
double emission_integrand(double k, const PhotonStatistics& stats) {
  const double k2 = k * k;
  return k2 * k2 * k * photon_number(k, stats);
}

}  // namespace

double photon_number(double wavenumber, const PhotonStatistics& stats) {
  if (!(wavenumber >= 0.0)) throw DomainError("photon_number: wavenumber must be >= 0");
  if (!(stats.temperature > 0.0) || !(stats.lambda_cv > 0.0)) {
    throw DomainError("photon_number: temperature and lambda must be > 0");
  }
  const double x = hbar * c * wavenumber / (k_B * stats.temperature);
  return 2.0 * std::exp(-x - x * x / (2.0 * stats.lambda_cv));
}

QuadratureResult lambda_em2_integral(double radius, double temperature, const ComplexPermittivity& eps,
                                     double lambda_cv, const QuadratureSpec& spec) {
  if (!(radius > 0.0) || !(temperature > 0.0) || !(lambda_cv > 0.0)) {
    throw DomainError("lambda_em2_numeric: radius, temperature and lambda must be > 0");
  }
  const double im_cm = clausius_mossotti(eps).imag();
  if (im_cm == 0.0) return {};

  const PhotonStatistics stats{temperature, lambda_cv};
  const double k_thermal = k_B * temperature / (hbar * c);
  // Peak of x^5 exp(-x - x^2/(2 lambda)) solves x^2 + lambda x - 5 lambda = 0.
  const double x_peak = 10.0 * lambda_cv / (lambda_cv + std::sqrt(lambda_cv * lambda_cv + 20.0 * lambda_cv));
  const double k_peak = x_peak * k_thermal;
  const double f_peak = emission_integrand(k_peak, stats);

  double k_cut = 2.0 * k_peak;
  while (emission_integrand(k_cut, stats) > kPeakFraction * f_peak) k_cut *= 2.0;

  // Past k_cut the log-derivative of the integrand is below -(a - 5/k_cut),
  // a = 1/k_thermal, so the tail is bounded by f(k_cut) / (a - 5/k_cut).
  const double decay = 1.0 / k_thermal - 5.0 / k_cut;
  const double tail_bound = decay > 0.0 ? emission_integrand(k_cut, stats) / decay : 0.0;

  const double points[3] = {0.0, k_peak, k_cut};
  const QuadratureResult raw = integrate([&stats](double k) { return emission_integrand(k, stats); },
                                         std::span<const double>(points), spec);
  const double prefactor = 4.0 * c * radius * radius * radius / pi * im_cm;
  return {prefactor * raw.value, prefactor * (raw.error + tail_bound), raw.intervals};
}

double lambda_em2_exact_reduction(double radius, double temperature, const ComplexPermittivity& eps,
                                  double lambda_cv) {
  if (!(radius > 0.0) || !(temperature >= 0.0) || !(lambda_cv > 0.0)) {
    throw DomainError("lambda_em2_exact_reduction: bad arguments");
  }
  const double l = lambda_cv;
  const double kt = k_B * temperature / (hbar * c);
  const double kt3 = kt * kt * kt;
  const double bracket = 2.0 * (l + 1.0) * (l + 8.0) -
                         std::sqrt(2.0 * pi * l) * (l * l + 10.0 * l + 15.0) * erfcx(std::sqrt(0.5 * l));
  return 4.0 * c * radius * radius * radius / pi * kt3 * kt3 * clausius_mossotti(eps).imag() * l * l * l *
         bracket;
}

double bose_einstein_momentum_pdf(double momentum, double gas_mass, double temperature) {
  if (!(momentum >= 0.0)) throw DomainError("bose_einstein_momentum_pdf: momentum must be >= 0");
  if (!(gas_mass > 0.0) || !(temperature > 0.0)) {
    throw DomainError("bose_einstein_momentum_pdf: mass and temperature must be > 0");
  }
  const double mkt = gas_mass * k_B * temperature;
  const double u = momentum * momentum / (2.0 * mkt);
  // p^2 / (e^u - 1) = 2 m k_B T * u / (e^u - 1); series below u = 1e-8.
  const double ratio = u < 1e-8 ? 2.0 * mkt * (1.0 - 0.5 * u + u * u / 12.0)
                                : momentum * momentum / std::expm1(u);
  return std::sqrt(2.0 / pi) / (zeta_3_2 * mkt * std::sqrt(mkt)) * ratio;
}

double momentum_moment(int order, double gas_mass, double temperature, const QuadratureSpec& spec) {
  if (order != 0 && order != 1 && order != 3) {
    throw DomainError("momentum_moment: order must be 0, 1 or 3, got " + std::to_string(order));
  }
  if (!(gas_mass > 0.0) || !(temperature > 0.0)) {
    throw DomainError("momentum_moment: mass and temperature must be > 0");
  }
  const double thermal_momentum = std::sqrt(2.0 * gas_mass * k_B * temperature);
  auto integrand = [=](double p) {
    return std::pow(p, order) * bose_einstein_momentum_pdf(p, gas_mass, temperature);
  };
  return integrate(integrand, HalfLine{0.0, thermal_momentum}, spec).value;
}

double momentum_moment_closed_form(int order, double gas_mass, double temperature) {
  if (!(gas_mass > 0.0) || !(temperature > 0.0)) {
    throw DomainError("momentum_moment_closed_form: mass and temperature must be > 0");
  }
  const double mkt = gas_mass * k_B * temperature;
  switch (order) {
    case 0:
      return 1.0;
    case 1:
      return pi * std::sqrt(2.0 * pi) / (3.0 * zeta_3_2) * std::sqrt(mkt);
    case 3:
      return 8.0 * std::sqrt(2.0 / pi) * zeta_3 / zeta_3_2 * mkt * std::sqrt(mkt);
    default:
      throw DomainError("momentum_moment_closed_form: order must be 0, 1 or 3");
  }
}

double lambda_coll_numeric(double radius, double gas_mass, double number_density, double temperature,
                           const QuadratureSpec& spec) {
  if (!(radius > 0.0) || !(gas_mass > 0.0) || !(temperature > 0.0) || !(number_density >= 0.0)) {
    throw DomainError("lambda_coll_numeric: bad arguments");
  }
  if (number_density == 0.0) return 0.0;
  const double p3 = momentum_moment(3, gas_mass, temperature, spec);
  return pi * radius * radius * number_density / (3.0 * hbar * hbar * gas_mass) * p3;
}

}  // namespace deco::oracle
