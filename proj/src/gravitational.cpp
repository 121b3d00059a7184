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

#include "deco/gravitational.hpp"

#include <cmath>

#include "deco/constants.hpp"
#include "deco/errors.hpp"

namespace deco {

using namespace constants;

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

// Non-positive temperature or separation means no decoherence; negative
// values are still rejected.
bool no_decoherence(double temperature, double separation) {
  if (temperature < 0.0) throw DomainError("tau_g: temperature must be >= 0");
  if (separation < 0.0) throw DomainError("tau_g: separation must be >= 0");
  return temperature == 0.0 || separation == 0.0;
}

}  // namespace

double tau_g_general(double heat_capacity, double temperature, double separation) {
  if (no_decoherence(temperature, separation)) return kNoDecoherence;
  if (!(heat_capacity > 0.0)) throw DomainError("tau_g: heat capacity must be > 0");
  return kSqrt2 * hbar * c * c / (std::sqrt(k_B * heat_capacity) * g_earth * temperature * separation);
}

double tau_g_einstein(double dof, double temperature, double separation) {
  if (no_decoherence(temperature, separation)) return kNoDecoherence;
  if (!(dof > 0.0)) throw DomainError("tau_g: degrees of freedom must be > 0");
  return kSqrt2 * hbar * c * c / (std::sqrt(dof) * g_earth * k_B * temperature * separation);
}

double tau_g_debye(double dof, double debye_temperature, double temperature, double separation) {
  if (no_decoherence(temperature, separation)) return kNoDecoherence;
  if (!(dof > 0.0)) throw DomainError("tau_g: degrees of freedom must be > 0");
  if (!(debye_temperature > 0.0)) throw DomainError("tau_g: Debye temperature must be > 0");
  const double prefactor = std::sqrt(5.0 / (2.0 * dof)) / (pi * pi);
  return prefactor * hbar * c * c * debye_temperature * std::sqrt(debye_temperature) /
         (g_earth * k_B * temperature * temperature * std::sqrt(temperature) * separation);
}

double debye_einstein_ratio(double reduced_temperature) {
  if (!(reduced_temperature > 0.0)) throw DomainError("debye_einstein_ratio: T/T_D must be > 0");
  return std::sqrt(5.0) / (2.0 * pi * pi) * std::pow(reduced_temperature, -1.5);
}

double model_crossover() { return std::pow(std::sqrt(5.0) / (2.0 * pi * pi), 2.0 / 3.0); }

GravitationalResult gravitational_decoherence(const SystemSpec& system, HeatCapacityModel model) {
  const double temperature = system.internal_temperature;
  const double debye_temperature = system.material.debye_temperature;
  GravitationalResult out;
  out.model_used = temperature > 0.0 ? resolve_model(model, temperature, debye_temperature)
                                     : (model == HeatCapacityModel::Auto ? HeatCapacityModel::DebyeLowT : model);
  if (temperature == 0.0 || system.separation == 0.0) {
    out.tau_g = kNoDecoherence;
    if (temperature > 0.0) {
      out.cv_used = heat_capacity(out.model_used, degrees_of_freedom(system), temperature, debye_temperature);
    }
    return out;
  }
  const double dof = degrees_of_freedom(system);
  out.cv_used = heat_capacity(out.model_used, dof, temperature, debye_temperature);
  switch (out.model_used) {
    case HeatCapacityModel::EinsteinClassical:
      out.tau_g = tau_g_einstein(dof, temperature, system.separation);
      break;
    case HeatCapacityModel::DebyeLowT:
      out.tau_g = tau_g_debye(dof, debye_temperature, temperature, system.separation);
      break;
    default:
      out.tau_g = tau_g_general(out.cv_used, temperature, system.separation);
      break;
  }
  return out;
}

}  // namespace deco
