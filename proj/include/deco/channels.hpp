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

#include <optional>
#include <string>
#include <string_view>

#include "deco/matter.hpp"
#include "deco/special_functions.hpp"

namespace deco {

/// Localization parameter (1/(m^2 s)) and event rate (1/s) of one channel.
struct ChannelRates {
  std::string label;
  double lambda = 0.0;
  double gamma = 0.0;
};

enum class EmissionModel {
  Model1,  // homogeneous sphere, Planck photon statistics
  Model2,  // photon statistics shaped by the internal heat capacity
};

std::string_view to_string(EmissionModel model);
/// "1" or "2".
EmissionModel parse_emission_model(std::string_view text);

/// Relative closed-form / integral deviation above which Model 2 falls back
/// to the integral.
inline constexpr double kModel2ArbitrationTolerance = 1e-6;

/// Emission or absorption localization parameter with the Model-2 arbitration record.
struct EmissionResult {
  double lambda = 0.0;                  // value used downstream
  double closed_form = 0.0;             // Model 1, or the Model-2 closed form
  std::optional<double> integral;       // Model 2 only
  double relative_deviation = 0.0;      // |closed - integral| / integral
  bool discrepancy = false;             // integral returned instead of the closed form
};

/// Rayleigh scattering of thermal photons,
/// 8! 8 zeta(9) c r^6 / (9 pi) (k_B T/hbar c)^9 (Re CM)^2.
double lambda_scatt(double radius, double photon_temperature, const ComplexPermittivity& eps);

/// Model 1: 16 pi^5 c r^3 / 189 (k_B T/hbar c)^6 Im CM.
double lambda_em1(double radius, double temperature, const ComplexPermittivity& eps);

/// Model-2 closed form in the printed bracket form
///   (4 c r^3/pi)(k_B T/hbar c)^6 Im CM lambda^3
///     [2(lambda+1)(lambda+8) + sqrt(lambda)(lambda^2+10 lambda+15) erfcx(sqrt(lambda/2))],
/// lambda = C_V/k_B. Only erfcx is used, so lambda can reach 1e60 without overflow.
double lambda_em2_closed_form(double radius, double temperature, const ComplexPermittivity& eps,
                              double heat_capacity);

/// Emission at the internal temperature. Model 2 is checked against the
/// defining integral and replaced by it when they differ by more than
/// kModel2ArbitrationTolerance.
EmissionResult lambda_em(EmissionModel model, double radius, double temperature, const ComplexPermittivity& eps,
                         double heat_capacity);

/// Absorption: same form as emission, evaluated at the photon temperature.
inline EmissionResult lambda_abs(EmissionModel model, double radius, double photon_temperature,
                                 const ComplexPermittivity& eps, double heat_capacity) {
  return lambda_em(model, radius, photon_temperature, eps, heat_capacity);
}

/// Shared event rate of the thermal channels, (2/pi) zeta(3) c r^2 (k_B T/hbar c)^3.
double gamma_thermal(double radius, double temperature);

/// Collisional localization for one species at partial pressure P_s,
/// 8 sqrt(2 pi) zeta(3) / (3 zeta(3/2)) P_s r^2 / hbar^2 sqrt(m k_B T).
double lambda_coll_species(double radius, double molecular_mass, double partial_pressure, double temperature);

/// The same rate written with the number density n = P/(k_B T).
double lambda_coll_number_density(double radius, double molecular_mass, double number_density,
                                  double temperature);

/// 16 sqrt(3) zeta(3/2) P_s r^2 / sqrt(m k_B T).
double gamma_coll_species(double radius, double molecular_mass, double partial_pressure, double temperature);

/// Partial-pressure sums over the mixture. P = 0 gives 0 at any temperature;
/// otherwise T must be > 0.
double lambda_coll(double radius, const GasMixture& gas, double pressure, double temperature);
double gamma_coll(double radius, const GasMixture& gas, double pressure, double temperature);

}  // namespace deco
