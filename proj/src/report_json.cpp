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

#include "deco/report_json.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include <fmt/format.h>

namespace deco::report {

using nlohmann::json;

double round9(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 8);
  double out = v;
  std::from_chars(buf, res.ptr, out);
  return out;
}

namespace {

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round9(v);
}

std::string csv_number(double v) { return fmt::format("{:.8e}", v); }

json region_json(const DominanceRegion& r) {
  return {{"cells", r.cells},
          {"temperature_min_K", num(r.temperature_min)},
          {"temperature_max_K", num(r.temperature_max)},
          {"dx_min_m", num(r.separation_min)},
          {"dx_max_m", num(r.separation_max)}};
}

json axis_json(const AxisSpec& a) { return {{"lo", num(a.lo)}, {"hi", num(a.hi)}, {"count", a.count}}; }

}  // namespace

json to_json(const DecoherenceSummary& s) {
  json channels = json::array();
  for (const auto& c : s.channels) {
    json ch = {{"name", c.rates.label},
               {"lambda_m2_s", num(c.rates.lambda)},
               {"gamma_s", num(c.rates.gamma)},
               {"tau_s", num(c.tau)},
               {"regime", std::string(to_string(c.regime))}};
    if (s.em_model == EmissionModel::Model2 && (c.rates.label == "emission" || c.rates.label == "absorption")) {
      ch["model2_discrepancy"] = c.discrepancy;
      ch["model2_relative_deviation"] = num(c.relative_deviation);
    }
    channels.push_back(std::move(ch));
  }
  return {{"tau_g_s", num(s.tau_g)},
          {"tau_g_model", std::string(to_string(s.gravitational.model_used))},
          {"heat_capacity_J_K", num(s.gravitational.cv_used)},
          {"tau_tc_s", num(s.tau_tc)},
          {"dominant", s.dominant},
          {"dx_m", num(s.separation)},
          {"cv_model", std::string(to_string(s.cv_model))},
          {"em_model", std::string(to_string(s.em_model))},
          {"channels", std::move(channels)}};
}

json to_json(const oracle::VerificationReport& r) {
  json comparisons = json::array();
  for (const auto& c : r.comparisons) {
    json params = json::object();
    for (const auto& [k, v] : c.parameters) params[k] = num(v);
    comparisons.push_back({{"name", c.name},
                           {"parameters", std::move(params)},
                           {"closed_form", num(c.closed_form)},
                           {"numeric", num(c.numeric)},
                           {"relative_deviation", num(c.relative_deviation)},
                           {"tolerance", num(c.tolerance)},
                           {"pass", c.pass}});
  }
  json model2 = json::array();
  for (const auto& e : r.model2) {
    model2.push_back({{"lambda", num(e.lambda_cv)},
                      {"closed_form", num(e.closed_form)},
                      {"integral", num(e.integral)},
                      {"integral_error", num(e.integral_error)},
                      {"exact_reduction", num(e.exact_reduction)},
                      {"relative_deviation", num(e.relative_deviation)},
                      {"reduction_deviation", num(e.reduction_deviation)},
                      {"engine_value", num(e.engine_value)},
                      {"discrepancy", e.discrepancy}});
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "oracle_verify"},
          {"all_passed", r.all_passed},
          {"comparisons", std::move(comparisons)},
          {"model2", {{"radius_m", num(r.model2_radius)},
                      {"temperature_K", num(r.model2_temperature)},
                      {"entries", std::move(model2)}}}};
}

json to_json(const BenchmarkReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json comps = json::array();
    for (const auto& c : row.comparisons) {
      json jc = {{"quantity", c.quantity},
                 {"computed", num(c.computed)},
                 {"computed_decade", c.computed_decade},
                 {"reference_decade", c.reference_decade},
                 {"match", c.match},
                 {"explained_by_radius", c.explained_by_radius},
                 {"note", c.note}};
      jc["required_radius_m"] = c.required_radius ? num(*c.required_radius) : json(nullptr);
      comps.push_back(std::move(jc));
    }
    json jr = {{"preset", row.preset},
               {"convention", row.convention},
               {"radius_m", num(row.radius)},
               {"dx_m", num(row.separation)},
               {"dof", num(row.dof)},
               {"flagged", row.flagged},
               {"comparisons", std::move(comps)}};
    jr["experiment_time_decade"] = row.experiment_time_decade ? json(*row.experiment_time_decade) : json(nullptr);
    rows.push_back(std::move(jr));
  }
  return {{"schema_version", kSchemaVersion}, {"kind", "table1"}, {"rows", std::move(rows)}};
}

json to_json(const Material& m) {
  return {{"name", m.name},
          {"mass_density_kg_m3", num(m.mass_density)},
          {"debye_temperature_K", num(m.debye_temperature)},
          {"permittivity", {{"re", num(m.permittivity.re)}, {"im", num(m.permittivity.im)}}},
          {"molar_mass_kg_mol", num(m.molar_mass)}};
}

std::string scan_csv(const ScanResult& result) {
  std::string out(kScanCsvHeader);
  out += '\n';
  for (const auto& c : result.cells) {
    out += csv_number(c.temperature);
    out += ',';
    out += csv_number(c.separation);
    out += ',';
    if (c.valid) {
      out += csv_number(c.tau_g) + ',' + csv_number(c.tau_tc) + ',' + csv_number(c.ratio) + ',';
      out += c.dominant ? '1' : '0';
    } else {
      out += "nan,nan,nan,nan";
    }
    out += '\n';
  }
  return out;
}

json scan_json(const ScanResult& r, std::string_view preset) {
  json contours = json::array();
  for (const auto& p : r.contours) {
    json pts = json::array();
    for (const auto& q : p.points) pts.push_back({num(q.temperature), num(q.separation), num(q.log_ratio)});
    contours.push_back({{"closed", p.closed}, {"points", std::move(pts)}});
  }
  json regions = json::array();
  for (const auto& reg : r.regions) regions.push_back(region_json(reg));
  json invalid = json::array();
  for (const auto& c : r.cells) {
    if (!c.valid) invalid.push_back({{"T_K", num(c.temperature)}, {"dx_m", num(c.separation)}, {"error", c.error}});
  }
  auto tracking = [](const std::optional<double>& pin) -> json {
    if (pin) return num(*pin);
    return "grid";
  };
  std::string gas = r.environment.gas.name();
  if (gas.empty() && !r.environment.gas.empty()) gas = r.environment.gas.components().front().species.name;
  json sys = {{"material", r.system.material.name},
              {"radius_m", num(r.system.radius)},
              {"pressure_Pa", num(r.environment.pressure)},
              {"gas", gas},
              {"molecule_count_override",
               r.system.molecule_count_override ? num(*r.system.molecule_count_override) : json(nullptr)}};
  return {{"schema_version", kSchemaVersion},
          {"kind", "scan"},
          {"preset", preset.empty() ? json(nullptr) : json(std::string(preset))},
          {"system", std::move(sys)},
          {"grid", {{"temperature_K", axis_json(r.grid.temperature)}, {"dx_m", axis_json(r.grid.separation)},
                    {"spacing", "log"}, {"order", "temperature-major"}}},
          {"cv_model", std::string(to_string(r.options.cv_model))},
          {"em_model", std::string(to_string(r.options.em_model))},
          {"temperature_tracking",
           {{"internal", "grid"},
            {"photon", tracking(r.options.photon_temperature)},
            {"gas", tracking(r.options.gas_temperature)}}},
          {"region_count", r.regions.size()},
          {"regions", std::move(regions)},
          {"invalid_count", r.invalid_count},
          {"invalid_cells", std::move(invalid)},
          {"contour_tolerance", num(r.contour_tolerance)},
          {"unconverged_edges", r.unconverged_edges},
          {"contours", std::move(contours)},
          {"markers", {{"max_demonstrated_dx_m", num(r.markers.max_demonstrated_separation)},
                       {"min_resolvable_dx_m", num(r.markers.min_resolvable_distance)}}}};
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.close();
    if (!f) {
      std::error_code ignore;
      std::filesystem::remove(tmp, ignore);
      throw IoError("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    std::filesystem::remove(tmp, ignore);
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace deco::report
