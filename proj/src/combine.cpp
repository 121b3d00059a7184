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

#include "deco/combine.hpp"

#include <cmath>
#include <string>

#include "deco/errors.hpp"

namespace deco {

std::string_view to_string(WavelengthRegime regime) {
  switch (regime) {
    case WavelengthRegime::LongWavelength:
      return "long-wavelength";
    case WavelengthRegime::Crossover:
      return "crossover";
    case WavelengthRegime::ShortWavelength:
      return "short-wavelength";
    case WavelengthRegime::Inactive:
      return "inactive";
  }
  return "unknown";
}

WavelengthRegime classify_regime(const ChannelRates& channel, double separation) {
  if (channel.gamma == 0.0 || channel.lambda == 0.0) return WavelengthRegime::Inactive;
  const double x = separation * separation * channel.lambda / channel.gamma;
  if (x < 0.1) return WavelengthRegime::LongWavelength;
  if (x > 10.0) return WavelengthRegime::ShortWavelength;
  return WavelengthRegime::Crossover;
}

namespace {

double channel_rate(const ChannelRates& ch, double separation) {
  if (!(ch.lambda >= 0.0) || !(ch.gamma >= 0.0)) {
    throw DomainError("tau_tc: channel " + ch.label + " has negative rates");
  }
  if (ch.gamma == 0.0) return 0.0;
  return ch.gamma * std::tanh(separation * separation * ch.lambda / ch.gamma);
}

}  // namespace

double tau_tc(std::span<const ChannelRates> channels, double separation) {
  if (!(separation >= 0.0)) throw DomainError("tau_tc: separation must be >= 0");
  double total = 0.0;
  for (const auto& ch : channels) total += channel_rate(ch, separation);
  return total > 0.0 ? 1.0 / total : kNoDecoherence;
}

double coherence_factor(double time, double tau) {
  if (!(time >= 0.0)) throw DomainError("coherence_factor: time must be >= 0");
  if (!(tau > 0.0)) throw DomainError("coherence_factor: tau must be > 0");
  if (std::isinf(tau)) return 1.0;
  return std::exp(-time / tau);
}

namespace {

template <typename F>
auto attributed(const char* channel, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw DomainError(std::string(channel) + ": " + e.what());
  }
}

ChannelSummary summarize(ChannelRates rates, double separation) {
  ChannelSummary s;
  const double rate = channel_rate(rates, separation);
  s.tau = rate > 0.0 ? 1.0 / rate : kNoDecoherence;
  s.regime = classify_regime(rates, separation);
  s.rates = std::move(rates);
  return s;
}

}  // namespace

std::vector<ChannelSummary> environment_channels(const SystemSpec& system, const Environment& env,
                                                 double heat_capacity, EmissionModel em_model) {
  const double r = system.radius;
  const double dx = system.separation;
  const auto& eps = system.material.permittivity;
  const double t_env = env.photon_temperature;
  const double t_int = system.internal_temperature;

  std::vector<ChannelSummary> out;
  out.reserve(4);

  out.push_back(attributed("scattering", [&] {
    return summarize({"scattering", lambda_scatt(r, t_env, eps), gamma_thermal(r, t_env)}, dx);
  }));

  auto thermal = [&](const char* label, double temperature) {
    return attributed(label, [&] {
      EmissionResult em{};
      if (temperature > 0.0) em = lambda_em(em_model, r, temperature, eps, heat_capacity);
      ChannelSummary s = summarize({label, em.lambda, gamma_thermal(r, temperature)}, dx);
      s.discrepancy = em.discrepancy;
      s.relative_deviation = em.relative_deviation;
      return s;
    });
  };
  out.push_back(thermal("emission", t_int));
  out.push_back(thermal("absorption", t_env));

  out.push_back(attributed("collisions", [&] {
    return summarize({"collisions", lambda_coll(r, env.gas, env.pressure, env.gas_temperature),
                      gamma_coll(r, env.gas, env.pressure, env.gas_temperature)},
                     dx);
  }));
  return out;
}

DecoherenceSummary evaluate(const SystemSpec& system, const Environment& env, HeatCapacityModel cv_model,
                            EmissionModel em_model) {
  attributed("system", [&] {
    validate(system);
    validate(env);
    return 0;
  });

  DecoherenceSummary s;
  s.separation = system.separation;
  s.cv_model = cv_model;
  s.em_model = em_model;
  s.gravitational = attributed("gravitational", [&] { return gravitational_decoherence(system, cv_model); });
  s.tau_g = s.gravitational.tau_g;

  const double cv = s.gravitational.cv_used;
  if (em_model == EmissionModel::Model2 && cv == 0.0 && env.photon_temperature > 0.0) {
    throw DomainError("absorption: Model 2 needs a heat capacity, but the internal temperature is 0");
  }

  s.channels = environment_channels(system, env, cv, em_model);

  std::vector<ChannelRates> rates;
  rates.reserve(s.channels.size());
  for (const auto& ch : s.channels) rates.push_back(ch.rates);
  s.tau_tc = tau_tc(rates, system.separation);
  s.dominant = s.tau_g < s.tau_tc;
  return s;
}

}  // namespace deco
