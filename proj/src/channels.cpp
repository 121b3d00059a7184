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

#include "deco/channels.hpp"

#include <cmath>
#include <string>

#include "deco/constants.hpp"
#include "deco/errors.hpp"
#include "deco/oracle.hpp"

namespace deco {

using namespace constants;

namespace {

double thermal_wavenumber(double temperature) { return k_B * temperature / (hbar * c); }

void check_radius_temperature(const char* who, double radius, double temperature) {
  if (!(radius > 0.0)) throw DomainError(std::string(who) + ": radius must be > 0");
  if (!(temperature >= 0.0)) throw DomainError(std::string(who) + ": temperature must be >= 0");
}

void check_gas(const char* who, double radius, double mass, double pressure, double temperature) {
  if (!(radius > 0.0)) throw DomainError(std::string(who) + ": radius must be > 0");
  if (!(mass > 0.0)) throw DomainError(std::string(who) + ": molecular mass must be > 0");
  if (!(pressure >= 0.0)) throw DomainError(std::string(who) + ": pressure must be >= 0");
  if (pressure > 0.0 && !(temperature > 0.0)) {
    throw DomainError(std::string(who) + ": gas temperature must be > 0");
  }
}

}  // namespace

std::string_view to_string(EmissionModel model) { return model == EmissionModel::Model1 ? "1" : "2"; }

EmissionModel parse_emission_model(std::string_view text) {
  if (text == "1") return EmissionModel::Model1;
  if (text == "2") return EmissionModel::Model2;
  throw DomainError("unknown emission model '" + std::string(text) + "'");
}

double lambda_scatt(double radius, double photon_temperature, const ComplexPermittivity& eps) {
  check_radius_temperature("lambda_scatt", radius, photon_temperature);
  if (photon_temperature == 0.0) return 0.0;
  constexpr double factorial8 = 40320.0;
  const double re_cm = clausius_mossotti(eps).real();
  const double k = thermal_wavenumber(photon_temperature);
  const double k3 = k * k * k;
  const double r3 = radius * radius * radius;
  return factorial8 * 8.0 * zeta_9 * c * r3 * r3 / (9.0 * pi) * k3 * k3 * k3 * re_cm * re_cm;
}

double lambda_em1(double radius, double temperature, const ComplexPermittivity& eps) {
  check_radius_temperature("lambda_em", radius, temperature);
  if (temperature == 0.0) return 0.0;
  const double pi5 = pi * pi * pi * pi * pi;
  const double k3 = std::pow(thermal_wavenumber(temperature), 3);
  return 16.0 * pi5 * c * radius * radius * radius / 189.0 * k3 * k3 * clausius_mossotti(eps).imag();
}

double lambda_em2_closed_form(double radius, double temperature, const ComplexPermittivity& eps,
                              double heat_capacity) {
  check_radius_temperature("lambda_em", radius, temperature);
  if (!(heat_capacity > 0.0)) throw DomainError("lambda_em: Model 2 needs C_V > 0");
  if (temperature == 0.0) return 0.0;
  const double l = heat_capacity / k_B;
  const double bracket =
      2.0 * (l + 1.0) * (l + 8.0) + std::sqrt(l) * (l * l + 10.0 * l + 15.0) * erfcx(std::sqrt(0.5 * l));
  const double k3 = std::pow(thermal_wavenumber(temperature), 3);
  return 4.0 * c * radius * radius * radius / pi * k3 * k3 * clausius_mossotti(eps).imag() * l * l * l * bracket;
}

EmissionResult lambda_em(EmissionModel model, double radius, double temperature, const ComplexPermittivity& eps,
                         double heat_capacity) {
  EmissionResult out;
  if (model == EmissionModel::Model1) {
    out.closed_form = lambda_em1(radius, temperature, eps);
    out.lambda = out.closed_form;
    return out;
  }

  out.closed_form = lambda_em2_closed_form(radius, temperature, eps, heat_capacity);
  if (temperature == 0.0 || clausius_mossotti(eps).imag() == 0.0) {
    out.integral = 0.0;
    out.lambda = 0.0;
    return out;
  }
  const double integral = oracle::lambda_em2_numeric(radius, temperature, eps, heat_capacity / k_B);
  out.integral = integral;
  out.relative_deviation = std::abs(out.closed_form - integral) / std::abs(integral);
  out.discrepancy = out.relative_deviation > kModel2ArbitrationTolerance;
  out.lambda = out.discrepancy ? integral : out.closed_form;
  return out;
}

double gamma_thermal(double radius, double temperature) {
  check_radius_temperature("gamma_thermal", radius, temperature);
  const double k = thermal_wavenumber(temperature);
  return 2.0 / pi * zeta_3 * c * radius * radius * k * k * k;
}

double lambda_coll_species(double radius, double molecular_mass, double partial_pressure, double temperature) {
  check_gas("lambda_coll", radius, molecular_mass, partial_pressure, temperature);
  if (partial_pressure == 0.0) return 0.0;
  const double prefactor = 8.0 * std::sqrt(2.0 * pi) * zeta_3 / (3.0 * zeta_3_2);
  return prefactor * partial_pressure * radius * radius / (hbar * hbar) *
         std::sqrt(molecular_mass * k_B * temperature);
}

double lambda_coll_number_density(double radius, double molecular_mass, double number_density,
                                  double temperature) {
  if (!(number_density >= 0.0)) throw DomainError("lambda_coll: number density must be >= 0");
  check_gas("lambda_coll", radius, molecular_mass, number_density, temperature);
  if (number_density == 0.0) return 0.0;
  const double prefactor = 8.0 * std::sqrt(2.0 * pi) * zeta_3 / (3.0 * zeta_3_2);
  const double kt = k_B * temperature;
  return prefactor * std::sqrt(molecular_mass) * number_density * radius * radius / (hbar * hbar) * kt *
         std::sqrt(kt);
}

double gamma_coll_species(double radius, double molecular_mass, double partial_pressure, double temperature) {
  check_gas("gamma_coll", radius, molecular_mass, partial_pressure, temperature);
  if (partial_pressure == 0.0) return 0.0;
  return 16.0 * std::sqrt(3.0) * zeta_3_2 * partial_pressure * radius * radius /
         std::sqrt(molecular_mass * k_B * temperature);
}

double lambda_coll(double radius, const GasMixture& gas, double pressure, double temperature) {
  double total = 0.0;
  for (const auto& comp : gas.components()) {
    total += lambda_coll_species(radius, comp.species.molecular_mass, comp.fraction * pressure, temperature);
  }
  return total;
}

double gamma_coll(double radius, const GasMixture& gas, double pressure, double temperature) {
  double total = 0.0;
  for (const auto& comp : gas.components()) {
    total += gamma_coll_species(radius, comp.species.molecular_mass, comp.fraction * pressure, temperature);
  }
  return total;
}

}  // namespace deco
