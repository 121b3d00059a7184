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

#include "deco/matter.hpp"

#include <cmath>

#include "deco/constants.hpp"
#include "deco/errors.hpp"

namespace deco {

GasMixture::GasMixture(std::vector<GasComponent> components, std::string name)
    : components_(std::move(components)), name_(std::move(name)) {
  double total = 0.0;
  for (const auto& c : components_) {
    if (!(c.fraction > 0.0 && c.fraction <= 1.0)) {
      throw DomainError("gas mixture: fraction of " + c.species.name + " outside (0, 1]");
    }
    if (!(c.species.molecular_mass > 0.0)) {
      throw DomainError("gas mixture: molecular mass of " + c.species.name + " must be > 0");
    }
    total += c.fraction;
  }
  if (!components_.empty() && std::abs(total - 1.0) > 1e-9) {
    throw DomainError("gas mixture: fractions sum to " + std::to_string(total) + ", expected 1");
  }
}

GasMixture GasMixture::pure(const GasSpecies& species) {
  return GasMixture({{species, 1.0}}, species.name);
}

void validate(const Material& m) {
  if (!(m.mass_density > 0.0)) throw DomainError("material " + m.name + ": mass_density must be > 0");
  if (!(m.debye_temperature > 0.0)) {
    throw DomainError("material " + m.name + ": debye_temperature must be > 0");
  }
  if (!(m.molar_mass > 0.0)) throw DomainError("material " + m.name + ": molar_mass must be > 0");
  if (!(m.permittivity.im >= 0.0)) {
    throw DomainError("material " + m.name + ": permittivity must be passive (im >= 0)");
  }
}

void validate(const SystemSpec& s) {
  if (!(s.radius > 0.0)) throw DomainError("system: radius must be > 0");
  if (!(s.internal_temperature >= 0.0)) throw DomainError("system: internal temperature must be >= 0");
  if (!(s.separation >= 0.0)) throw DomainError("system: separation must be >= 0");
  if (s.molecule_count_override && !(*s.molecule_count_override > 0.0)) {
    throw DomainError("system: molecule count override must be > 0");
  }
  validate(s.material);
}

void validate(const Environment& e) {
  if (!(e.photon_temperature >= 0.0)) throw DomainError("environment: photon temperature must be >= 0");
  if (!(e.gas_temperature >= 0.0)) throw DomainError("environment: gas temperature must be >= 0");
  if (!(e.pressure >= 0.0)) throw DomainError("environment: pressure must be >= 0");
}

double molecule_count(double radius, const Material& material) {
  if (!(radius >= 0.0)) throw DomainError("molecule_count: radius must be >= 0");
  validate(material);
  const double volume = 4.0 / 3.0 * constants::pi * radius * radius * radius;
  return volume * material.mass_density * constants::N_A / material.molar_mass;
}

double degrees_of_freedom(const SystemSpec& system) {
  const double n_m = system.molecule_count_override.value_or(molecule_count(system.radius, system.material));
  return 3.0 * n_m;
}

double gas_number_density(double pressure, double temperature) {
  if (!(temperature > 0.0)) throw DomainError("gas_number_density: temperature must be > 0");
  if (!(pressure >= 0.0)) throw DomainError("gas_number_density: pressure must be >= 0");
  return pressure / (constants::k_B * temperature);
}

}  // namespace deco
