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

#include <string_view>

namespace deco {

enum class HeatCapacityModel {
  EinsteinClassical,  // C_V = N k_B
  DebyeLowT,          // (4 pi^4 / 5) N k_B (T/T_D)^3
  DebyeFull,          // full Debye integral
  Auto,               // DebyeLowT below kAutoDebyeThreshold * T_D, else EinsteinClassical
};

/// T/T_D below which Auto picks the Debye low-temperature form.
inline constexpr double kAutoDebyeThreshold = 0.2;

/// The concrete model Auto resolves to at T/T_D; other models map to themselves.
HeatCapacityModel resolve_model(HeatCapacityModel model, double temperature, double debye_temperature);

/// Heat capacity in J/K of N harmonic degrees of freedom.
/// Requires N > 0, T > 0, T_D > 0; throws DomainError otherwise.
double heat_capacity(HeatCapacityModel model, double dof, double temperature, double debye_temperature);

/// int_0^x t^4 e^t / (e^t - 1)^2 dt
double debye_integral(double upper);

std::string_view to_string(HeatCapacityModel model);
/// Accepts the CLI spellings einstein, debye, debye-full and auto.
HeatCapacityModel parse_heat_capacity_model(std::string_view text);

}  // namespace deco
