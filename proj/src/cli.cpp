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

#include "deco/cli.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "deco/catalog.hpp"
#include "deco/combine.hpp"
#include "deco/errors.hpp"
#include "deco/oracle_suite.hpp"
#include "deco/report_json.hpp"
#include "deco/scan.hpp"
#include "deco/table_one.hpp"
#include "deco/units.hpp"

namespace deco::cli {

namespace {

using nlohmann::json;

constexpr const char* kDefaultPreset = "sapphire";

// Flags shared by compute and scan. Options are inspected through count()
// so "given" and "default" stay distinguishable.
struct SystemFlags {
  std::string material, preset, gas, pressure, catalog;
  double radius = 0, temp = 0, temp_int = 0, temp_env = 0, temp_gas = 0, dx = 0;
  std::string cv_model = "auto", em_model = "1";
  CLI::Option *o_material{}, *o_preset{}, *o_gas{}, *o_pressure{}, *o_catalog{};
  CLI::Option *o_radius{}, *o_temp{}, *o_temp_int{}, *o_temp_env{}, *o_temp_gas{}, *o_dx{};
};

void add_catalog_flag(CLI::App* app, std::string& path, CLI::Option*& opt) {
  opt = app->add_option("--catalog", path, "catalog file merged over the built-in one");
}

void add_system_flags(CLI::App* app, SystemFlags& f, bool per_point) {
  f.o_preset = app->add_option("--preset", f.preset, "experiment preset");
  f.o_material = app->add_option("--material", f.material, "material name");
  f.o_radius = app->add_option("--radius", f.radius, "sphere radius [m]");
  if (per_point) {
    f.o_temp = app->add_option("--temp", f.temp, "all temperatures [K]");
    f.o_temp_int = app->add_option("--temp-int", f.temp_int, "internal temperature [K]");
    f.o_dx = app->add_option("--dx", f.dx, "superposition separation [m]");
  }
  f.o_temp_env = app->add_option("--temp-env", f.temp_env, "photon temperature [K]");
  f.o_temp_gas = app->add_option("--temp-gas", f.temp_gas, "gas temperature [K]");
  f.o_pressure = app->add_option("--pressure", f.pressure, "gas pressure, e.g. 1e-15, 1e-15Pa, 1e-17mbar");
  f.o_gas = app->add_option("--gas", f.gas, "gas or mixture name");
  app->add_option("--cv-model", f.cv_model, "einstein | debye | debye-full | auto")->capture_default_str();
  app->add_option("--em-model", f.em_model, "emission model 1 | 2")->capture_default_str();
  add_catalog_flag(app, f.catalog, f.o_catalog);
}

Catalog load_catalog(const std::string& path, const CLI::Option* opt) {
  if (opt == nullptr || opt->count() == 0) return builtin_catalog();
  Catalog c = builtin_catalog();
  c.merge(load_catalog_file(path, c));
  return c;
}

struct Resolved {
  Catalog catalog;
  SystemSpec system;
  Environment env;
  std::string preset;  // empty when only the defaults were used
  HeatCapacityModel cv_model = HeatCapacityModel::Auto;
  EmissionModel em_model = EmissionModel::Model1;
};

bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

Resolved resolve(const SystemFlags& f) {
  Resolved r;
  r.catalog = load_catalog(f.catalog, f.o_catalog);
  const bool has_preset = given(f.o_preset);
  const ExperimentPreset& p = r.catalog.preset(has_preset ? f.preset : kDefaultPreset);
  if (has_preset) r.preset = p.name;
  r.system = r.catalog.system_for(p);
  r.env = r.catalog.environment_for(p);
  if (!has_preset) r.system.molecule_count_override.reset();
  if (given(f.o_material)) {
    r.system.material = r.catalog.material(f.material);
    r.system.molecule_count_override.reset();
  }
  if (given(f.o_gas)) r.env.gas = r.catalog.gas(f.gas);
  if (given(f.o_radius)) r.system.radius = f.radius;
  if (given(f.o_dx)) r.system.separation = f.dx;
  if (given(f.o_temp)) {
    r.system.internal_temperature = f.temp;
    r.env.photon_temperature = f.temp;
    r.env.gas_temperature = f.temp;
  }
  if (given(f.o_temp_int)) r.system.internal_temperature = f.temp_int;
  if (given(f.o_temp_env)) r.env.photon_temperature = f.temp_env;
  if (given(f.o_temp_gas)) r.env.gas_temperature = f.temp_gas;
  if (given(f.o_pressure)) r.env.pressure = parse_pressure(f.pressure);
  r.cv_model = parse_heat_capacity_model(f.cv_model);
  r.em_model = parse_emission_model(f.em_model);
  return r;
}

double parse_double(std::string_view text, const char* what) {
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw CLI::ValidationError(what, "cannot parse '" + std::string(text) + "' as a number");
  }
  return v;
}

std::pair<double, double> parse_range(const std::string& text, const char* what) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError(what, "expected lo:hi, got '" + text + "'");
  return {parse_double(std::string_view(text).substr(0, colon), what),
          parse_double(std::string_view(text).substr(colon + 1), what)};
}

std::pair<int, int> parse_grid(const std::string& text) {
  auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw CLI::ValidationError("--grid", "expected TxD, got '" + text + "'");
  auto as_int = [&](std::string_view s) {
    int v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw CLI::ValidationError("--grid", "expected TxD, got '" + text + "'");
    }
    return v;
  };
  return {as_int(std::string_view(text).substr(0, x)), as_int(std::string_view(text).substr(x + 1))};
}

std::string g3(double v) { return fmt::format("{:.2e}", v); }

std::string gas_label(const GasMixture& g) {
  if (!g.name().empty()) return g.name();
  return g.empty() ? "none" : g.components().front().species.name;
}

json input_json(const Resolved& r) {
  auto n = [](double v) { return report::round9(v); };
  return {{"preset", r.preset.empty() ? json(nullptr) : json(r.preset)},
          {"material", r.system.material.name},
          {"radius_m", n(r.system.radius)},
          {"dx_m", n(r.system.separation)},
          {"temp_int_K", n(r.system.internal_temperature)},
          {"temp_env_K", n(r.env.photon_temperature)},
          {"temp_gas_K", n(r.env.gas_temperature)},
          {"pressure_Pa", n(r.env.pressure)},
          {"gas", gas_label(r.env.gas)},
          {"dof", n(degrees_of_freedom(r.system))}};
}

void emit(const json& doc, bool to_stdout, const std::string& path, std::ostream& out) {
  const std::string text = report::dump(doc);
  if (!path.empty()) report::write_atomic(path, text);
  if (to_stdout) out << text;
}

// ---------------------------------------------------------------------------

int cmd_compute(const SystemFlags& f, bool as_json, const std::string& out_path, std::ostream& out) {
  const Resolved r = resolve(f);
  const DecoherenceSummary s = evaluate(r.system, r.env, r.cv_model, r.em_model);
  if (as_json || !out_path.empty()) {
    json doc = {{"schema_version", report::kSchemaVersion}, {"kind", "compute"}, {"input", input_json(r)}};
    doc.update(report::to_json(s));
    emit(doc, as_json, out_path, out);
    if (as_json) return kOk;
  }
  out << fmt::format("material   {}{}\n", r.system.material.name, r.preset.empty() ? "" : " (preset " + r.preset + ")");
  out << fmt::format("radius     {} m    dx {} m    dof {}\n", g3(r.system.radius), g3(r.system.separation),
                     g3(degrees_of_freedom(r.system)));
  out << fmt::format("T_int {} K    T_env {} K    T_gas {} K    P {} Pa ({})\n", g3(r.system.internal_temperature),
                     g3(r.env.photon_temperature), g3(r.env.gas_temperature), g3(r.env.pressure),
                     gas_label(r.env.gas));
  out << fmt::format("tau_G [{}]  {} s    C_V {} J/K\n", to_string(s.gravitational.model_used), g3(s.tau_g),
                     g3(s.gravitational.cv_used));
  out << fmt::format("tau_TC [model {}]  {} s\n\n", to_string(s.em_model), g3(s.tau_tc));
  out << fmt::format("{:<12} {:>12} {:>12} {:>12}  {}\n", "channel", "Lambda", "gamma", "tau", "regime");
  out << fmt::format("{:<12} {:>12} {:>12} {:>12}\n", "", "1/(m^2 s)", "1/s", "s");
  for (const auto& c : s.channels) {
    out << fmt::format("{:<12} {:>12} {:>12} {:>12}  {}{}\n", c.rates.label, g3(c.rates.lambda), g3(c.rates.gamma),
                       g3(c.tau), to_string(c.regime),
                       c.discrepancy ? fmt::format("  (closed form off by {}, integral used)", g3(c.relative_deviation))
                                     : "");
  }
  out << "\n"
      << (s.dominant ? "gravitational time dilation dominates (tau_G < tau_TC)\n"
                     : "environmental decoherence dominates (tau_TC <= tau_G)\n");
  return kOk;
}

struct ScanFlags {
  std::string grid = "200x200", t_range = "1e-3:1e2", dx_range = "1e-18:1", out = "scan.csv", json_path;
  double contour_tol = 1e-3;
  int threads = 0;
};

int cmd_scan(const SystemFlags& f, const ScanFlags& sf, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(f);
  const auto [nt, nd] = parse_grid(sf.grid);
  const auto [tlo, thi] = parse_range(sf.t_range, "--t-range");
  const auto [dlo, dhi] = parse_range(sf.dx_range, "--dx-range");
  GridSpec grid{{tlo, thi, nt}, {dlo, dhi, nd}};
  ScanOptions opt;
  opt.cv_model = r.cv_model;
  opt.em_model = r.em_model;
  if (given(f.o_temp_env)) opt.photon_temperature = f.temp_env;
  if (given(f.o_temp_gas)) opt.gas_temperature = f.temp_gas;
  opt.threads = sf.threads;

  ScanResult res = refine_contour(sweep(r.system, r.env, grid, opt), sf.contour_tol);

  std::filesystem::path csv_path = sf.out;
  std::filesystem::path json_path = sf.json_path.empty() ? std::filesystem::path(csv_path).replace_extension(".json")
                                                         : std::filesystem::path(sf.json_path);
  report::write_atomic(csv_path, report::scan_csv(res));
  report::write_atomic(json_path, report::dump(report::scan_json(res, r.preset)));

  out << fmt::format("{} x {} cells, {} dominance region(s), {} invalid cell(s), {} contour(s)\n", nt, nd,
                     res.regions.size(), res.invalid_count, res.contours.size());
  if (res.unconverged_edges > 0) err << fmt::format("warning: {} contour edge(s) did not converge\n", res.unconverged_edges);
  out << fmt::format("wrote {} and {}\n", csv_path.string(), json_path.string());
  return kOk;
}

int cmd_table1(const std::string& catalog_path, const CLI::Option* catalog_opt, bool as_json,
               const std::string& out_path, std::ostream& out) {
  const Catalog catalog = load_catalog(catalog_path, catalog_opt);
  const BenchmarkReport report = table_one(catalog);
  if (as_json || !out_path.empty()) {
    emit(report::to_json(report), as_json, out_path, out);
    if (as_json) return kOk;
  }
  out << fmt::format("{:<16} {:<14} {:<15} {:>10} {:>5} {:>5}  {}\n", "preset", "convention", "quantity", "value [s]",
                     "calc", "ref", "match");
  for (const auto& row : report.rows) {
    for (const auto& c : row.comparisons) {
      std::string verdict = c.match ? "yes" : "NO";
      if (!c.match && c.required_radius) {
        verdict += fmt::format("  needs r = {} m (preset {} m){}", g3(*c.required_radius), g3(row.radius),
                               c.explained_by_radius ? ", within radius uncertainty" : "");
      }
      out << fmt::format("{:<16} {:<14} {:<15} {:>10} {:>5} {:>5}  {}\n", row.preset, row.convention, c.quantity,
                         g3(c.computed), c.computed_decade, c.reference_decade, verdict);
    }
  }
  return kOk;
}

int cmd_materials_list(const Catalog& c, bool as_json, std::ostream& out) {
  if (as_json) {
    json mats = json::array(), gases = json::array(), presets = json::array();
    for (const auto& [name, m] : c.materials()) mats.push_back(report::to_json(m));
    for (const auto& [name, g] : c.gases()) gases.push_back({{"name", name}, {"molecular_mass_kg", report::round9(g.molecular_mass)}});
    for (const auto& [name, m] : c.mixtures()) gases.push_back({{"name", name}, {"mixture", true}});
    for (const auto& [name, p] : c.presets()) presets.push_back(name);
    out << report::dump({{"schema_version", report::kSchemaVersion}, {"kind", "materials"},
                         {"materials", mats}, {"gases", gases}, {"presets", presets}});
    return kOk;
  }
  out << "materials\n";
  for (const auto& [name, m] : c.materials()) {
    out << fmt::format("  {:<14} rho {} kg/m^3  T_D {} K  eps {}{:+.2e}i\n", name, g3(m.mass_density),
                       g3(m.debye_temperature), g3(m.permittivity.re), m.permittivity.im);
  }
  out << "gases\n";
  for (const auto& [name, g] : c.gases()) out << fmt::format("  {:<14} m {} kg\n", name, g3(g.molecular_mass));
  for (const auto& [name, mix] : c.mixtures()) {
    std::string parts;
    for (const auto& comp : mix.components()) parts += fmt::format(" {} {}", comp.species.name, comp.fraction);
    out << fmt::format("  {:<14} mixture:{}\n", name, parts);
  }
  out << "presets\n";
  for (const auto& [name, p] : c.presets()) out << fmt::format("  {:<16} {}\n", name, p.description);
  return kOk;
}

int cmd_materials_show(const Catalog& c, const std::string& name, bool as_json, std::ostream& out) {
  if (c.presets().count(name) && !c.materials().count(name) && !as_json) {
    const auto& p = c.preset(name);
    out << fmt::format("preset {}: {}\n  material {}  r {} m  dx {} m\n  T_int {} K  T_env {} K  T_gas {} K\n"
                       "  P {} Pa  gas {}\n",
                       p.name, p.description, p.material, g3(p.radius), g3(p.separation), g3(p.internal_temperature),
                       g3(p.photon_temperature), g3(p.gas_temperature), g3(p.pressure), p.gas);
    return kOk;
  }
  const Material& m = c.material(name);
  if (as_json) {
    json doc = {{"schema_version", report::kSchemaVersion}, {"kind", "material"}};
    doc.update(report::to_json(m));
    out << report::dump(doc);
    return kOk;
  }
  // Catalog data are printed as stored, not rounded.
  out << fmt::format("{}\n  mass density       {} kg/m^3\n  Debye temperature  {} K\n  permittivity       {}{:+}i\n"
                     "  molar mass         {} kg/mol\n",
                     m.name, m.mass_density, m.debye_temperature, m.permittivity.re, m.permittivity.im, m.molar_mass);
  return kOk;
}

int cmd_oracle_verify(bool as_json, const std::string& out_path, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const oracle::VerificationReport rep = oracle::verify_all();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(report::to_json(rep), as_json, out_path, out);
  if (as_json) return kOk;
  std::size_t failed = 0;
  for (const auto& c : rep.comparisons) failed += c.pass ? 0 : 1;
  // The per-family maximum is what users look for first.
  auto family_max = [&](std::string_view prefix) {
    double m = 0.0;
    for (const auto& c : rep.comparisons)
      if (c.name.rfind(prefix, 0) == 0) m = std::max(m, c.relative_deviation);
    return m;
  };
  out << fmt::format("{} comparisons, {} failed ({:.1f} s)\n", rep.comparisons.size(), failed, secs);
  for (const char* fam : {"nu_normalization", "moment_p1", "moment_p3", "lambda_coll"}) {
    out << fmt::format("  {:<18} max deviation {}\n", fam, g3(family_max(fam)));
  }
  out << "Model-2 emission, closed form vs defining integral\n";
  for (const auto& e : rep.model2) {
    out << fmt::format("  lambda {:>9}  deviation {:>9}  {}\n", g3(e.lambda_cv), g3(e.relative_deviation),
                       e.discrepancy ? "discrepancy, integral used" : "agrees");
  }
  if (!out_path.empty()) out << "wrote " << out_path << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gravitational time-dilation vs environmental decoherence", "deco"};
  app.require_subcommand(1);

  SystemFlags compute_flags;
  bool compute_json = false;
  std::string compute_out;
  auto* compute = app.add_subcommand("compute", "decoherence times for one configuration");
  add_system_flags(compute, compute_flags, true);
  compute->add_flag("--json", compute_json, "print the JSON summary instead of the table");
  compute->add_option("--out", compute_out, "also write the JSON summary to this file");

  SystemFlags scan_flags;
  ScanFlags scan_opts;
  auto* scan = app.add_subcommand("scan", "dominance map over temperature and separation");
  add_system_flags(scan, scan_flags, false);
  scan->add_option("--grid", scan_opts.grid, "cells as TxD")->capture_default_str();
  scan->add_option("--t-range", scan_opts.t_range, "temperature range lo:hi [K]")->capture_default_str();
  scan->add_option("--dx-range", scan_opts.dx_range, "separation range lo:hi [m]")->capture_default_str();
  scan->add_option("--out", scan_opts.out, "CSV output path")->capture_default_str();
  scan->add_option("--json", scan_opts.json_path, "JSON sidecar path (default: CSV path with .json)");
  scan->add_option("--contour-tol", scan_opts.contour_tol, "|ln(tau_G/tau_TC)| tolerance of contour points")
      ->capture_default_str();
  scan->add_option("--threads", scan_opts.threads, "worker threads, 0 = all cores")->capture_default_str();

  std::string table_catalog, table_out;
  CLI::Option* table_catalog_opt = nullptr;
  bool table_json = false;
  auto* table = app.add_subcommand("table1", "benchmark experiments, computed vs reference decades");
  add_catalog_flag(table, table_catalog, table_catalog_opt);
  table->add_flag("--json", table_json, "print JSON");
  table->add_option("--out", table_out, "also write JSON to this file");

  std::string mat_catalog, mat_name;
  CLI::Option* mat_catalog_opt = nullptr;
  bool mat_json = false;
  auto* materials = app.add_subcommand("materials", "catalog contents");
  add_catalog_flag(materials, mat_catalog, mat_catalog_opt);
  materials->add_flag("--json", mat_json, "print JSON");
  materials->require_subcommand(1);
  auto* mat_list = materials->add_subcommand("list", "list materials, gases and presets");
  auto* mat_show = materials->add_subcommand("show", "show one material or preset");
  mat_show->add_option("name", mat_name, "material or preset name")->required();
  mat_list->fallthrough();
  mat_show->fallthrough();

  bool oracle_json = false;
  std::string oracle_out;
  auto* oracle_cmd = app.add_subcommand("oracle", "closed forms vs numerical oracles");
  oracle_cmd->require_subcommand(1);
  auto* verify = oracle_cmd->add_subcommand("verify", "run the oracle suite");
  verify->add_flag("--json", oracle_json, "print the JSON report");
  verify->add_option("--out", oracle_out, "write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_flags, compute_json, compute_out, out);
    if (scan->parsed()) return cmd_scan(scan_flags, scan_opts, out, err);
    if (table->parsed()) return cmd_table1(table_catalog, table_catalog_opt, table_json, table_out, out);
    if (materials->parsed()) {
      const Catalog c = load_catalog(mat_catalog, mat_catalog_opt);
      if (mat_list->parsed()) return cmd_materials_list(c, mat_json, out);
      if (mat_show->parsed()) return cmd_materials_show(c, mat_name, mat_json, out);
    }
    if (verify->parsed()) return cmd_oracle_verify(oracle_json, oracle_out, out);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResolutionError& e) {
    err << "error: " << e.what() << "\n";
    return kResolution;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << fmt::format(" (best estimate {}, error bound {})\n", g3(e.best_estimate()),
                                                g3(e.error_bound()));
    return kDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const report::IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}

}  // namespace deco::cli
