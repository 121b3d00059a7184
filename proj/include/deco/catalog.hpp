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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deco/matter.hpp"

namespace deco {

/// Parameter set for one benchmark interferometry configuration.
struct ExperimentPreset {
  std::string name;
  std::string description;
  std::string material;
  std::string gas;
  double radius = 0.0;                // m
  double separation = 0.0;            // m
  double internal_temperature = 0.0;  // K
  double photon_temperature = 0.0;    // K
  double gas_temperature = 0.0;       // K
  double pressure = 0.0;              // Pa
  std::optional<double> molecule_count;
  // Second molecule-count convention reported next to the default one.
  std::optional<double> alt_molecule_count;
  std::string alt_label;

  friend bool operator==(const ExperimentPreset&, const ExperimentPreset&) = default;
};

/// Materials, gases, mixtures and presets keyed by name. Immutable once built;
/// lookups throw ResolutionError for unknown names.
class Catalog {
 public:
  const Material& material(std::string_view name) const;
  const GasSpecies& species(std::string_view name) const;
  /// A named mixture, or a single species treated as a pure gas.
  GasMixture gas(std::string_view name) const;
  const ExperimentPreset& preset(std::string_view name) const;

  const std::map<std::string, Material, std::less<>>& materials() const { return materials_; }
  const std::map<std::string, GasSpecies, std::less<>>& gases() const { return gases_; }
  const std::map<std::string, GasMixture, std::less<>>& mixtures() const { return mixtures_; }
  const std::map<std::string, ExperimentPreset, std::less<>>& presets() const { return presets_; }

  void add(Material m);
  void add(GasSpecies g);
  void add(GasMixture mix);
  void add(ExperimentPreset p);

  /// Entries of `other` replace same-named entries here.
  void merge(const Catalog& other);

  SystemSpec system_for(const ExperimentPreset& p) const;
  Environment environment_for(const ExperimentPreset& p) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::map<std::string, Material, std::less<>> materials_;
  std::map<std::string, GasSpecies, std::less<>> gases_;
  std::map<std::string, GasMixture, std::less<>> mixtures_;
  std::map<std::string, ExperimentPreset, std::less<>> presets_;
};

/// Catalog compiled into the binary from data/catalog.ini.
const Catalog& builtin_catalog();

/// Text of the embedded catalog file.
std::string_view builtin_catalog_text();

/// INI-style reader. Sections are `[material NAME]`, `[gas NAME]`,
/// `[mixture NAME]` and `[preset NAME]`; `#` starts a comment.
/// Throws DomainError with the line number on malformed input.
Catalog parse_catalog(std::string_view text);

/// As above; mixture records may also reference gas species from `base`.
Catalog parse_catalog(std::string_view text, const Catalog& base);

Catalog load_catalog_file(const std::filesystem::path& path, const Catalog& base);

/// Writes every field with shortest round-trip formatting, so
/// parse_catalog(serialize_catalog(c)) == c.
std::string serialize_catalog(const Catalog& catalog);

}  // namespace deco
