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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deco/channels.hpp"
#include "deco/gravitational.hpp"
#include "deco/heat_capacity.hpp"
#include "deco/matter.hpp"

namespace deco {

enum class WavelengthRegime { LongWavelength, Crossover, ShortWavelength, Inactive };

std::string_view to_string(WavelengthRegime regime);

/// Diagnostic label from dx^2 Lambda / gamma: < 0.1 long, > 10 short.
WavelengthRegime classify_regime(const ChannelRates& channel, double separation);

struct ChannelSummary {
  ChannelRates rates;
  double tau = kNoDecoherence;  // 1 / (gamma tanh(dx^2 Lambda / gamma))
  WavelengthRegime regime = WavelengthRegime::Inactive;
  // Model-2 arbitration record (emission and absorption only).
  bool discrepancy = false;
  double relative_deviation = 0.0;
};

struct DecoherenceSummary {
  GravitationalResult gravitational;
  double tau_g = kNoDecoherence;
  double tau_tc = kNoDecoherence;
  std::vector<ChannelSummary> channels;
  bool dominant = false;  // tau_g < tau_tc
  double separation = 0.0;
  HeatCapacityModel cv_model = HeatCapacityModel::Auto;
  EmissionModel em_model = EmissionModel::Model1;
};

/// Combined thermal + collisional time
///   (sum_i gamma_i tanh(dx^2 Lambda_i / gamma_i))^{-1}.
/// Inactive channels (gamma = 0) add nothing; dx = 0 gives kNoDecoherence.
double tau_tc(std::span<const ChannelRates> channels, double separation);

/// exp(-t / tau); 1 for an infinite tau.
double coherence_factor(double time, double tau);

/// Localization parameters and rates of the four environmental channels.
/// `heat_capacity` feeds Model 2 only and may be 0 when the internal
/// temperature is 0. Thrown errors name the failing channel.
std::vector<ChannelSummary> environment_channels(const SystemSpec& system, const Environment& env,
                                                 double heat_capacity, EmissionModel em_model);

/// Full evaluation of one configuration.
DecoherenceSummary evaluate(const SystemSpec& system, const Environment& env, HeatCapacityModel cv_model,
                            EmissionModel em_model);

}  // namespace deco
