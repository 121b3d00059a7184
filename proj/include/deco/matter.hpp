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
#include <vector>

#include "deco/special_functions.hpp"

namespace deco {

/// Bulk description of a crystal species.
struct Material {
  std::string name;
  double mass_density = 0.0;       // kg / m^3
  double debye_temperature = 0.0;  // K
  ComplexPermittivity permittivity;
  double molar_mass = 0.0;         // kg / mol, per formula unit

  friend bool operator==(const Material&, const Material&) = default;
};

struct GasSpecies {
  std::string name;
  double molecular_mass = 0.0;  // kg

  friend bool operator==(const GasSpecies&, const GasSpecies&) = default;
};

struct GasComponent {
  GasSpecies species;
  double fraction = 0.0;

  friend bool operator==(const GasComponent&, const GasComponent&) = default;
};

/// Residual-gas composition. Fractions lie in (0, 1] and sum to 1 within 1e-9.
class GasMixture {
 public:
  GasMixture() = default;
  explicit GasMixture(std::vector<GasComponent> components, std::string name = {});

  static GasMixture pure(const GasSpecies& species);

  const std::vector<GasComponent>& components() const { return components_; }
  const std::string& name() const { return name_; }
  bool empty() const { return components_.empty(); }

  friend bool operator==(const GasMixture&, const GasMixture&) = default;

 private:
  std::vector<GasComponent> components_;
  std::string name_;
};

/// The delocalized sphere.
struct SystemSpec {
  double radius = 0.0;  // m
  Material material;
  double internal_temperature = 0.0;  // K
  double separation = 0.0;            // m
  // Replaces the density-derived molecule count (atoms, single molecules).
  std::optional<double> molecule_count_override;
};

struct Environment {
  double photon_temperature = 0.0;  // K
  double pressure = 0.0;            // Pa
  GasMixture gas;
  double gas_temperature = 0.0;  // K
};

void validate(const Material& m);
void validate(const SystemSpec& s);
void validate(const Environment& e);

/// Number of formula units in a homogeneous sphere, (4/3) pi r^3 rho N_A / M.
double molecule_count(double radius, const Material& material);

/// 3 N_m, with N_m taken from the override when present.
double degrees_of_freedom(const SystemSpec& system);

/// Ideal gas n = P / (k_B T).
double gas_number_density(double pressure, double temperature);

}  // namespace deco
