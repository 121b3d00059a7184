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

#include <cmath>
#include <random>

#include <doctest.h>

#include "deco/catalog.hpp"
#include "deco/constants.hpp"
#include "deco/errors.hpp"
#include "deco/gravitational.hpp"
#include "deco/heat_capacity.hpp"
#include "test_util.hpp"

using namespace deco;
using deco::testing::log_uniform;
using deco::testing::rel;
using constants::k_B;
using constants::pi;

namespace {
constexpr HeatCapacityModel kAll[] = {HeatCapacityModel::EinsteinClassical, HeatCapacityModel::DebyeLowT,
                                      HeatCapacityModel::DebyeFull, HeatCapacityModel::Auto};
}

TEST_CASE("heat capacity values") {
  CHECK(heat_capacity(HeatCapacityModel::EinsteinClassical, 3, 10, 100) == 3 * k_B);
  CHECK(rel(heat_capacity(HeatCapacityModel::DebyeLowT, 1, 10, 100), 4 * std::pow(pi, 4) / 5 * k_B * 1e-3) < 1e-14);
  CHECK(rel(4 * std::pow(pi, 4) / 5, 77.927) < 1e-5);
  CHECK(rel(heat_capacity(HeatCapacityModel::DebyeFull, 7, 1000, 100), 7 * k_B) < 0.01);
  CHECK(rel(heat_capacity(HeatCapacityModel::DebyeFull, 7, 1, 100), heat_capacity(HeatCapacityModel::DebyeLowT, 7, 1, 100)) <
        0.01);
  for (auto m : kAll) {
    CHECK_THROWS_AS(heat_capacity(m, 1, 0, 100), DomainError);
    CHECK_THROWS_AS(heat_capacity(m, 0, 1, 100), DomainError);
    CHECK_THROWS_AS(heat_capacity(m, 1, 1, 0), DomainError);
  }
}

TEST_CASE("auto selector") {
  CHECK(resolve_model(HeatCapacityModel::Auto, 0.19, 1.0) == HeatCapacityModel::DebyeLowT);
  CHECK(resolve_model(HeatCapacityModel::Auto, 0.2, 1.0) == HeatCapacityModel::EinsteinClassical);
  CHECK(resolve_model(HeatCapacityModel::Auto, 900, 185) == HeatCapacityModel::EinsteinClassical);
  CHECK(resolve_model(HeatCapacityModel::DebyeFull, 900, 185) == HeatCapacityModel::DebyeFull);
}

TEST_CASE("heat capacity model names") {
  for (auto m : kAll) CHECK(parse_heat_capacity_model(to_string(m)) == m);
  CHECK_THROWS_AS(parse_heat_capacity_model("dulong-petit"), DomainError);
}

TEST_CASE("heat capacity is monotone in T and linear in N") {
  std::mt19937_64 rng(3);
  for (auto m : kAll) {
    double prev = 0.0;
    for (double t = 1e-3; t < 1e4; t *= 1.07) {
      const double cv = heat_capacity(m, 1e6, t, 300.0);
      CHECK(cv >= prev);
      prev = cv;
    }
    for (int i = 0; i < 10; ++i) {
      const double n = log_uniform(rng, 1, 1e20), t = log_uniform(rng, 1e-3, 1e4);
      CHECK(rel(heat_capacity(m, 2 * n, t, 300), 2 * heat_capacity(m, n, t, 300)) < 1e-14);
    }
  }
}

TEST_CASE("tau_g closed forms") {
  const double hc2 = constants::hbar * constants::c * constants::c, g = constants::g_earth;
  CHECK(rel(tau_g_general(k_B, 2.0, 3e-3), std::sqrt(2.0) * hc2 / (k_B * g * 2.0 * 3e-3)) < 1e-14);
  CHECK(rel(tau_g_general(5e-20, 1, 1e-3), 2 * tau_g_general(5e-20, 1, 2e-3)) < 1e-14);
  CHECK(rel(tau_g_einstein(1e6, 1, 1e-3), 2 * tau_g_einstein(4e6, 1, 1e-3)) < 1e-14);
  CHECK(rel(tau_g_einstein(1e6, 1, 1e-3), 2 * tau_g_einstein(1e6, 2, 1e-3)) < 1e-14);
  CHECK(rel(tau_g_debye(1e6, 300, 1, 1e-3), 32 * tau_g_debye(1e6, 300, 4, 1e-3)) < 1e-14);
}

TEST_CASE("infinite time is a value, not an error") {
  CHECK(tau_g_general(k_B, 0.0, 1e-3) == kNoDecoherence);
  CHECK(tau_g_general(k_B, 1.0, 0.0) == kNoDecoherence);
  CHECK(tau_g_einstein(10, 1.0, 0.0) == kNoDecoherence);
  CHECK(tau_g_debye(10, 100, 0.0, 1.0) == kNoDecoherence);
  CHECK(1.0 < kNoDecoherence);
  CHECK_THROWS_AS(tau_g_einstein(10, -1.0, 1.0), DomainError);
}

TEST_CASE("closed forms agree with the general formula") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const double n = log_uniform(rng, 1, 1e25), td = log_uniform(rng, 1, 3000);
    const double t = log_uniform(rng, 1e-9, 1e4), dx = log_uniform(rng, 1e-18, 1);
    const double e = tau_g_general(heat_capacity(HeatCapacityModel::EinsteinClassical, n, t, td), t, dx);
    const double d = tau_g_general(heat_capacity(HeatCapacityModel::DebyeLowT, n, t, td), t, dx);
    CHECK(rel(tau_g_einstein(n, t, dx), e) < 1e-12);
    CHECK(rel(tau_g_debye(n, td, t, dx), d) < 1e-12);
  }
}

TEST_CASE("Debye / Einstein ratio") {
  std::mt19937_64 rng(23);
  const double pref = std::sqrt(5.0) / (2 * pi * pi);
  for (double red : {0.01, 0.1, 0.234, 0.5, 3.0}) {
    const double td = 1000.0, t = red * td;
    const double reference = tau_g_debye(1e9, td, t, 1e-6) / tau_g_einstein(1e9, t, 1e-6);
    CHECK(rel(reference, pref * std::pow(1 / red, 1.5)) < 1e-12);
    CHECK(rel(debye_einstein_ratio(red), reference) < 1e-12);
    for (int i = 0; i < 10; ++i) {
      const double n = log_uniform(rng, 1, 1e25), dx = log_uniform(rng, 1e-18, 1);
      CHECK(rel(tau_g_debye(n, td, t, dx) / tau_g_einstein(n, t, dx), reference) < 1e-12);
    }
  }
}

TEST_CASE("crossover") {
  const double x = model_crossover();
  CHECK(rel(x, std::pow(std::sqrt(5.0) / (2 * pi * pi), 2.0 / 3.0)) < 1e-15);
  CHECK(std::abs(x - 0.23411909720333327) < 1e-15);
  CHECK(std::abs(debye_einstein_ratio(x) - 1.0) < 1e-10);
  CHECK(debye_einstein_ratio(0.9 * x) > 1.0);
  CHECK(debye_einstein_ratio(1.1 * x) < 1.0);
}

TEST_CASE("sapphire anchor") {
  const Catalog& c = builtin_catalog();
  SystemSpec s{1e-6, c.material("sapphire"), 1.0, 1e-3, std::nullopt};
  const auto d = gravitational_decoherence(s, HeatCapacityModel::DebyeLowT);
  const auto e = gravitational_decoherence(s, HeatCapacityModel::EinsteinClassical);
  CHECK(rel(d.tau_g, 6.9e5) < 0.1);
  CHECK(rel(e.tau_g, 1.8e2) < 0.1);
  CHECK(d.model_used == HeatCapacityModel::DebyeLowT);
  CHECK(gravitational_decoherence(s, HeatCapacityModel::Auto).tau_g == d.tau_g);
  s.separation = 0.0;
  CHECK(gravitational_decoherence(s, HeatCapacityModel::Auto).tau_g == kNoDecoherence);
}
