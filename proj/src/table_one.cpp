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

#include "deco/table_one.hpp"

#include <cmath>
#include <cstdio>

#include "deco/combine.hpp"
#include "deco/gravitational.hpp"

namespace deco {

int decade(double value) { return static_cast<int>(std::floor(std::log10(value))); }

const std::vector<BenchmarkReference>& benchmark_references() {
  static const std::vector<BenchmarkReference> refs = {
      {"atoms", -5, 29, 3, std::nullopt},
      {"fullerene", -2, 6, -1, 8},
      {"micro-particles", std::nullopt, 12, 0, std::nullopt},
      {"diamonds", -13, 8, 2, std::nullopt},
      {"macro-particles", std::nullopt, 3, -19, std::nullopt},
  };
  return refs;
}

namespace {

using Quantity = double (*)(const SystemSpec&, const Environment&);

double debye_time(const SystemSpec& s, const Environment&) {
  return tau_g_debye(degrees_of_freedom(s), s.material.debye_temperature, s.internal_temperature, s.separation);
}

double einstein_time(const SystemSpec& s, const Environment&) {
  return tau_g_einstein(degrees_of_freedom(s), s.internal_temperature, s.separation);
}

double thermal_collisional_time(const SystemSpec& s, const Environment& e) {
  return evaluate(s, e, HeatCapacityModel::Auto, EmissionModel::Model1).tau_tc;
}

// Radius that puts the quantity in the middle of the reference decade,
// found by bisection in log r over four decades either side.
std::optional<double> radius_for_decade(Quantity q, SystemSpec s, const Environment& e, int target) {
  const double aim = target + 0.5;
  const double r0 = s.radius;
  auto offset = [&](double log_r) {
    s.radius = std::pow(10.0, log_r);
    return std::log10(q(s, e)) - aim;
  };
  double lo = std::log10(r0) - 4.0;
  double hi = std::log10(r0) + 4.0;
  double f_lo = offset(lo);
  const double f_hi = offset(hi);
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi) || (f_lo < 0.0) == (f_hi < 0.0)) return std::nullopt;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = offset(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return std::pow(10.0, 0.5 * (lo + hi));
}

DecadeComparison compare(const char* name, Quantity q, const SystemSpec& s, const Environment& e, int reference) {
  DecadeComparison c;
  c.quantity = name;
  c.computed = q(s, e);
  c.computed_decade = decade(c.computed);
  c.reference_decade = reference;
  c.match = std::abs(c.computed_decade - reference) <= 1;
  if (!c.match) {
    c.required_radius = radius_for_decade(q, s, e, reference);
    if (c.required_radius) {
      const double factor = *c.required_radius / s.radius;
      c.explained_by_radius = factor < std::sqrt(10.0) && factor > 1.0 / std::sqrt(10.0);
      c.note = "reference decade needs r = " + std::to_string(*c.required_radius) + " m (" +
               std::to_string(factor) + " x preset radius)";
    } else {
      c.note = "no radius within four decades reaches the reference decade";
    }
  }
  return c;
}

BenchmarkRow make_row(const Catalog& catalog, const ExperimentPreset& preset, const BenchmarkReference& ref,
                      std::optional<double> molecule_count, std::string convention) {
  ExperimentPreset p = preset;
  p.molecule_count = molecule_count;
  const SystemSpec s = catalog.system_for(p);
  const Environment e = catalog.environment_for(p);

  BenchmarkRow row;
  row.preset = p.name;
  row.convention = std::move(convention);
  row.radius = s.radius;
  row.separation = s.separation;
  row.dof = degrees_of_freedom(s);
  row.experiment_time_decade = ref.experiment_time;
  row.comparisons.push_back(compare("tau_g_debye", debye_time, s, e, ref.tau_g_debye));
  if (ref.tau_g_einstein) {
    row.comparisons.push_back(compare("tau_g_einstein", einstein_time, s, e, *ref.tau_g_einstein));
  }
  row.comparisons.push_back(compare("tau_tc", thermal_collisional_time, s, e, ref.tau_tc));
  for (const auto& c : row.comparisons) row.flagged = row.flagged || !c.match;
  return row;
}

std::string count_label(const std::optional<double>& count) {
  if (!count) return "from density";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "N_m = %g", *count);
  return buf;
}

}  // namespace

BenchmarkReport table_one(const Catalog& catalog) {
  BenchmarkReport report;
  for (const auto& ref : benchmark_references()) {
    const ExperimentPreset& preset = catalog.preset(ref.preset);
    report.rows.push_back(make_row(catalog, preset, ref, preset.molecule_count, count_label(preset.molecule_count)));
    if (preset.alt_molecule_count) {
      const std::string label =
          preset.alt_label.empty() ? count_label(preset.alt_molecule_count) : preset.alt_label;
      report.rows.push_back(make_row(catalog, preset, ref, preset.alt_molecule_count, label));
    }
  }
  return report;
}

}  // namespace deco
