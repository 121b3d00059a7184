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

#include "deco/heat_capacity.hpp"

#include <cmath>
#include <string>

#include "deco/constants.hpp"
#include "deco/errors.hpp"
#include "deco/quadrature.hpp"

namespace deco {

namespace {

// 4 pi^4 / 15, the value of the Debye integral at infinity.
constexpr double kDebyeIntegralLimit = 4.0 * constants::pi * constants::pi * constants::pi * constants::pi / 15.0;

double debye_integrand(double t) {
  if (t == 0.0) return 0.0;
  if (t < 30.0) {
    const double em1 = std::expm1(t);
    return t * t * t * t * (em1 + 1.0) / (em1 * em1);
  }
  const double e = std::exp(-t);
  return t * t * t * t * e / ((1.0 - e) * (1.0 - e));
}

}  // namespace

HeatCapacityModel resolve_model(HeatCapacityModel model, double temperature, double debye_temperature) {
  if (model != HeatCapacityModel::Auto) return model;
  return temperature / debye_temperature < kAutoDebyeThreshold ? HeatCapacityModel::DebyeLowT
                                                               : HeatCapacityModel::EinsteinClassical;
}

double debye_integral(double upper) {
  if (!(upper >= 0.0)) throw DomainError("debye_integral: upper limit must be >= 0");
  // Beyond t ~ 60 the integrand is below 1e-18 of its peak; past 100 the
  // tail is under 1e-34 and would only drive the quadrature into subnormals.
  if (upper > 100.0) return kDebyeIntegralLimit;
  if (upper > 60.0) {
    constexpr QuadratureSpec spec{1e-12, 0.0, 400};
    const double tail = integrate(debye_integrand, HalfLine{upper, 1.0}, spec).value;
    return kDebyeIntegralLimit - tail;
  }
  constexpr QuadratureSpec spec{1e-12, 0.0, 400};
  return integrate(debye_integrand, Interval{0.0, upper}, spec).value;
}

double heat_capacity(HeatCapacityModel model, double dof, double temperature, double debye_temperature) {
  if (!(dof > 0.0)) throw DomainError("heat_capacity: degrees of freedom must be > 0");
  if (!(temperature > 0.0)) throw DomainError("heat_capacity: temperature must be > 0");
  if (!(debye_temperature > 0.0)) throw DomainError("heat_capacity: Debye temperature must be > 0");

  const double reduced = temperature / debye_temperature;
  const double reduced3 = reduced * reduced * reduced;
  switch (resolve_model(model, temperature, debye_temperature)) {
    case HeatCapacityModel::EinsteinClassical:
      return dof * constants::k_B;
    case HeatCapacityModel::DebyeLowT:
      return 3.0 * kDebyeIntegralLimit * dof * constants::k_B * reduced3;
    case HeatCapacityModel::DebyeFull:
      return 3.0 * dof * constants::k_B * reduced3 * debye_integral(1.0 / reduced);
    case HeatCapacityModel::Auto:
      break;
  }
  throw DomainError("heat_capacity: unresolved model");
}

std::string_view to_string(HeatCapacityModel model) {
  switch (model) {
    case HeatCapacityModel::EinsteinClassical:
      return "einstein";
    case HeatCapacityModel::DebyeLowT:
      return "debye";
    case HeatCapacityModel::DebyeFull:
      return "debye-full";
    case HeatCapacityModel::Auto:
      return "auto";
  }
  return "unknown";
}

HeatCapacityModel parse_heat_capacity_model(std::string_view text) {
  if (text == "einstein") return HeatCapacityModel::EinsteinClassical;
  if (text == "debye") return HeatCapacityModel::DebyeLowT;
  if (text == "debye-full") return HeatCapacityModel::DebyeFull;
  if (text == "auto") return HeatCapacityModel::Auto;
  throw DomainError("unknown heat-capacity model '" + std::string(text) + "'");
}

}  // namespace deco
