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

#include "deco/catalog.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>

#include "builtin_catalog_text.hpp"
#include "deco/errors.hpp"
#include "deco/units.hpp"

namespace deco {

// ---------------------------------------------------------------------------
// Lookup

namespace {

template <typename Map>
const auto& find_or_throw(const Map& map, std::string_view name, const char* kind) {
  auto it = map.find(name);
  if (it == map.end()) {
    throw ResolutionError(std::string("unknown ") + kind + " '" + std::string(name) + "'");
  }
  return it->second;
}

}  // namespace

const Material& Catalog::material(std::string_view name) const {
  return find_or_throw(materials_, name, "material");
}

const GasSpecies& Catalog::species(std::string_view name) const {
  return find_or_throw(gases_, name, "gas");
}

GasMixture Catalog::gas(std::string_view name) const {
  if (auto it = mixtures_.find(name); it != mixtures_.end()) return it->second;
  if (auto it = gases_.find(name); it != gases_.end()) return GasMixture::pure(it->second);
  throw ResolutionError("unknown gas '" + std::string(name) + "'");
}

const ExperimentPreset& Catalog::preset(std::string_view name) const {
  return find_or_throw(presets_, name, "preset");
}

void Catalog::add(Material m) {
  validate(m);
  auto key = m.name;
  materials_.insert_or_assign(std::move(key), std::move(m));
}

void Catalog::add(GasSpecies g) {
  if (!(g.molecular_mass > 0.0)) throw DomainError("gas " + g.name + ": molecular_mass must be > 0");
  auto key = g.name;
  gases_.insert_or_assign(std::move(key), std::move(g));
}

void Catalog::add(GasMixture mix) {
  auto key = mix.name();
  mixtures_.insert_or_assign(std::move(key), std::move(mix));
}

void Catalog::add(ExperimentPreset p) {
  auto key = p.name;
  presets_.insert_or_assign(std::move(key), std::move(p));
}

void Catalog::merge(const Catalog& other) {
  for (const auto& [_, m] : other.materials_) add(m);
  for (const auto& [_, g] : other.gases_) add(g);
  for (const auto& [_, mix] : other.mixtures_) add(mix);
  for (const auto& [_, p] : other.presets_) add(p);
}

SystemSpec Catalog::system_for(const ExperimentPreset& p) const {
  SystemSpec s;
  s.radius = p.radius;
  s.material = material(p.material);
  s.internal_temperature = p.internal_temperature;
  s.separation = p.separation;
  s.molecule_count_override = p.molecule_count;
  return s;
}

Environment Catalog::environment_for(const ExperimentPreset& p) const {
  Environment e;
  e.photon_temperature = p.photon_temperature;
  e.pressure = p.pressure;
  e.gas = gas(p.gas);
  e.gas_temperature = p.gas_temperature;
  return e;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Record {
  std::string kind;
  std::string name;
  int line = 0;
  std::vector<std::pair<std::string, std::string>> fields;
};

class ParseFailure {
 public:
  explicit ParseFailure(const Record& r) : record_(r) {}
  [[noreturn]] void raise(const std::string& msg) const {
    throw DomainError("catalog line " + std::to_string(record_.line) + " [" + record_.kind + " " +
                      record_.name + "]: " + msg);
  }

 private:
  const Record& record_;
};

double parse_number(std::string_view text, const ParseFailure& fail) {
  text = trim(text);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    fail.raise("expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

// "10+1e-9i", "0.3-0.1i" or a bare real part.
ComplexPermittivity parse_permittivity(std::string_view text, const ParseFailure& fail) {
  text = trim(text);
  const char* first = text.data();
  const char* last = first + text.size();
  ComplexPermittivity eps;
  auto [ptr, ec] = std::from_chars(first, last, eps.re);
  if (ec != std::errc()) fail.raise("bad permittivity '" + std::string(text) + "'");
  if (ptr == last) return eps;
  const bool negative = *ptr == '-';
  if (*ptr != '+' && *ptr != '-') fail.raise("bad permittivity '" + std::string(text) + "'");
  ++ptr;
  auto [ptr2, ec2] = std::from_chars(ptr, last, eps.im);
  if (ec2 != std::errc() || ptr2 + 1 != last || *ptr2 != 'i') {
    fail.raise("bad permittivity '" + std::string(text) + "'");
  }
  if (negative) eps.im = -eps.im;
  return eps;
}

std::vector<Record> split_records(std::string_view text) {
  std::vector<Record> records;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw DomainError("catalog line " + std::to_string(line_no) + ": unterminated section header");
      }
      std::string_view header = trim(line.substr(1, line.size() - 2));
      const auto space = header.find(' ');
      if (space == std::string_view::npos) {
        throw DomainError("catalog line " + std::to_string(line_no) + ": section needs a kind and a name");
      }
      Record r;
      r.kind = std::string(trim(header.substr(0, space)));
      r.name = std::string(trim(header.substr(space + 1)));
      r.line = line_no;
      records.push_back(std::move(r));
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos || records.empty()) {
      throw DomainError("catalog line " + std::to_string(line_no) + ": expected 'key = value' inside a section");
    }
    records.back().fields.emplace_back(std::string(trim(line.substr(0, eq))),
                                       std::string(trim(line.substr(eq + 1))));
  }
  return records;
}

Material build_material(const Record& r) {
  ParseFailure fail(r);
  Material m;
  m.name = r.name;
  bool seen[4] = {false, false, false, false};
  for (const auto& [key, value] : r.fields) {
    if (key == "mass_density") {
      m.mass_density = parse_number(value, fail);
      seen[0] = true;
    } else if (key == "debye_temperature") {
      m.debye_temperature = parse_number(value, fail);
      seen[1] = true;
    } else if (key == "permittivity") {
      m.permittivity = parse_permittivity(value, fail);
      seen[2] = true;
    } else if (key == "molar_mass") {
      m.molar_mass = parse_number(value, fail);
      seen[3] = true;
    } else {
      fail.raise("unknown key '" + key + "'");
    }
  }
  for (bool s : seen) {
    if (!s) fail.raise("material records need mass_density, debye_temperature, permittivity and molar_mass");
  }
  try {
    validate(m);
  } catch (const DomainError& e) {
    fail.raise(e.what());
  }
  return m;
}

GasSpecies build_gas(const Record& r) {
  ParseFailure fail(r);
  GasSpecies g;
  g.name = r.name;
  for (const auto& [key, value] : r.fields) {
    if (key == "molecular_mass") {
      g.molecular_mass = parse_number(value, fail);
    } else {
      fail.raise("unknown key '" + key + "'");
    }
  }
  if (!(g.molecular_mass > 0.0)) fail.raise("molecular_mass must be > 0");
  return g;
}

GasMixture build_mixture(const Record& r, const Catalog& resolved) {
  ParseFailure fail(r);
  std::vector<GasComponent> components;
  for (const auto& [key, value] : r.fields) {
    try {
      components.push_back({resolved.species(key), parse_number(value, fail)});
    } catch (const ResolutionError& e) {
      fail.raise(e.what());
    }
  }
  try {
    return GasMixture(std::move(components), r.name);
  } catch (const DomainError& e) {
    fail.raise(e.what());
  }
}

ExperimentPreset build_preset(const Record& r) {
  ParseFailure fail(r);
  ExperimentPreset p;
  p.name = r.name;
  for (const auto& [key, value] : r.fields) {
    if (key == "description") {
      p.description = value;
    } else if (key == "material") {
      p.material = value;
    } else if (key == "gas") {
      p.gas = value;
    } else if (key == "radius") {
      p.radius = parse_number(value, fail);
    } else if (key == "separation") {
      p.separation = parse_number(value, fail);
    } else if (key == "internal_temperature") {
      p.internal_temperature = parse_number(value, fail);
    } else if (key == "photon_temperature") {
      p.photon_temperature = parse_number(value, fail);
    } else if (key == "gas_temperature") {
      p.gas_temperature = parse_number(value, fail);
    } else if (key == "pressure") {
      try {
        p.pressure = parse_pressure(value);
      } catch (const DomainError& e) {
        fail.raise(e.what());
      }
    } else if (key == "molecule_count") {
      p.molecule_count = parse_number(value, fail);
    } else if (key == "alt_molecule_count") {
      p.alt_molecule_count = parse_number(value, fail);
    } else if (key == "alt_label") {
      p.alt_label = value;
    } else {
      fail.raise("unknown key '" + key + "'");
    }
  }
  if (p.material.empty() || p.gas.empty()) fail.raise("presets need a material and a gas");
  if (!(p.radius > 0.0)) fail.raise("radius must be > 0");
  return p;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string format_permittivity(const ComplexPermittivity& eps) {
  std::string s = format_double(eps.re);
  if (std::signbit(eps.im)) {
    s += "-" + format_double(-eps.im);
  } else {
    s += "+" + format_double(eps.im);
  }
  return s + "i";
}

}  // namespace

Catalog parse_catalog(std::string_view text) {
  return parse_catalog(text, Catalog{});
}

Catalog parse_catalog(std::string_view text, const Catalog& base) {
  Catalog out;
  Catalog resolved = base;  // species visible to mixture records
  for (const auto& r : split_records(text)) {
    if (r.kind == "material") {
      out.add(build_material(r));
    } else if (r.kind == "gas") {
      GasSpecies g = build_gas(r);
      resolved.add(g);
      out.add(std::move(g));
    } else if (r.kind == "mixture") {
      out.add(build_mixture(r, resolved));
    } else if (r.kind == "preset") {
      out.add(build_preset(r));
    } else {
      throw DomainError("catalog line " + std::to_string(r.line) + ": unknown section kind '" + r.kind + "'");
    }
  }
  return out;
}

Catalog load_catalog_file(const std::filesystem::path& path, const Catalog& base) {
  std::ifstream in(path);
  if (!in) throw ResolutionError("cannot open catalog file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), base);
}

std::string serialize_catalog(const Catalog& catalog) {
  std::ostringstream out;
  for (const auto& [name, m] : catalog.materials()) {
    out << "[material " << name << "]\n"
        << "mass_density = " << format_double(m.mass_density) << "\n"
        << "debye_temperature = " << format_double(m.debye_temperature) << "\n"
        << "permittivity = " << format_permittivity(m.permittivity) << "\n"
        << "molar_mass = " << format_double(m.molar_mass) << "\n\n";
  }
  for (const auto& [name, g] : catalog.gases()) {
    out << "[gas " << name << "]\n"
        << "molecular_mass = " << format_double(g.molecular_mass) << "\n\n";
  }
  for (const auto& [name, mix] : catalog.mixtures()) {
    out << "[mixture " << name << "]\n";
    for (const auto& c : mix.components()) {
      out << c.species.name << " = " << format_double(c.fraction) << "\n";
    }
    out << "\n";
  }
  for (const auto& [name, p] : catalog.presets()) {
    out << "[preset " << name << "]\n";
    if (!p.description.empty()) out << "description = " << p.description << "\n";
    out << "material = " << p.material << "\n"
        << "gas = " << p.gas << "\n"
        << "radius = " << format_double(p.radius) << "\n"
        << "separation = " << format_double(p.separation) << "\n"
        << "internal_temperature = " << format_double(p.internal_temperature) << "\n"
        << "photon_temperature = " << format_double(p.photon_temperature) << "\n"
        << "gas_temperature = " << format_double(p.gas_temperature) << "\n"
        << "pressure = " << format_double(p.pressure) << "\n";
    if (p.molecule_count) out << "molecule_count = " << format_double(*p.molecule_count) << "\n";
    if (p.alt_molecule_count) out << "alt_molecule_count = " << format_double(*p.alt_molecule_count) << "\n";
    if (!p.alt_label.empty()) out << "alt_label = " << p.alt_label << "\n";
    out << "\n";
  }
  return out.str();
}

std::string_view builtin_catalog_text() { return detail::kBuiltinCatalogText; }

const Catalog& builtin_catalog() {
  static const Catalog catalog = parse_catalog(builtin_catalog_text());
  return catalog;
}

}  // namespace deco
