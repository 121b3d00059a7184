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

#include <limits>

#include "deco/heat_capacity.hpp"
#include "deco/matter.hpp"

namespace deco {

/// Value used for decoherence times when a channel cannot decohere
/// (zero separation, zero temperature, no active channel). It compares
/// greater than every finite time, so tau_g < tau_tc stays a total order.
inline constexpr double kNoDecoherence = std::numeric_limits<double>::infinity();

struct GravitationalResult {
  double tau_g = kNoDecoherence;  // s
  HeatCapacityModel model_used = HeatCapacityModel::DebyeLowT;
  double cv_used = 0.0;  // J/K
};

/// Time-dilation decoherence time for an arbitrary heat capacity:
/// sqrt(2) hbar c^2 / (sqrt(k_B C_V) g T dx).
double tau_g_general(double heat_capacity, double temperature, double separation);

/// Classical heat capacity C_V = N k_B.
double tau_g_einstein(double dof, double temperature, double separation);

/// Debye low-temperature heat capacity.
double tau_g_debye(double dof, double debye_temperature, double temperature, double separation);

/// tau_G^Debye / tau_G^Einstein = sqrt(5)/(2 pi^2) (T_D/T)^{3/2}; independent of N and dx.
double debye_einstein_ratio(double reduced_temperature);

/// T/T_D at which the Debye and Einstein times coincide, (sqrt(5)/(2 pi^2))^{2/3}.
double model_crossover();

/// tau_G for the sphere at its internal temperature under the chosen model.
/// DebyeFull goes through tau_g_general with the full Debye C_V.
GravitationalResult gravitational_decoherence(const SystemSpec& system, HeatCapacityModel model);

}  // namespace deco
