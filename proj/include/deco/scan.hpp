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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deco/combine.hpp"

namespace deco {

/// Log-spaced axis with exact endpoints.
struct AxisSpec {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
};

struct GridSpec {
  AxisSpec temperature;  // K
  AxisSpec separation;   // m
};

std::vector<double> axis_values(const AxisSpec& axis);
void validate(const GridSpec& grid);

struct ScanOptions {
  HeatCapacityModel cv_model = HeatCapacityModel::Auto;
  EmissionModel em_model = EmissionModel::Model1;
  // Unset: the quantity tracks the grid temperature.
  std::optional<double> photon_temperature;
  std::optional<double> gas_temperature;
  int threads = 0;  // 0 = hardware concurrency, 1 = serial
};

struct CellRecord {
  double temperature = 0.0;
  double separation = 0.0;
  double tau_g = 0.0;
  double tau_tc = 0.0;
  double ratio = 0.0;  // tau_g / tau_tc
  bool dominant = false;
  bool valid = true;
  std::string error;
};

struct ContourPoint {
  double temperature = 0.0;
  double separation = 0.0;
  double log_ratio = 0.0;  // natural log of tau_g / tau_tc at the point
};

struct Polyline {
  std::vector<ContourPoint> points;
  bool closed = false;
};

struct DominanceRegion {
  std::size_t cells = 0;
  double temperature_min = 0.0;
  double temperature_max = 0.0;
  double separation_min = 0.0;
  double separation_max = 0.0;
};

/// Reference separations drawn on dominance maps.
struct ScanMarkers {
  double max_demonstrated_separation = 0.54;  // m, long-baseline atom interferometry
  double min_resolvable_distance = 1e-10;     // m
};

struct ScanResult {
  GridSpec grid;
  ScanOptions options;
  SystemSpec system;  // template; temperature and separation overwritten per cell
  Environment environment;

  std::vector<double> temperatures;
  std::vector<double> separations;
  std::vector<CellRecord> cells;  // temperature-major: cells[iT * nD + iD]

  std::vector<DominanceRegion> regions;  // 4-connected, valid cells only
  std::size_t invalid_count = 0;

  std::vector<Polyline> contours;
  double contour_tolerance = 0.0;
  std::size_t unconverged_edges = 0;

  ScanMarkers markers;

  const CellRecord& cell(std::size_t it, std::size_t id) const { return cells[it * separations.size() + id]; }
};

/// Configuration used for the cell at (temperature, separation).
SystemSpec cell_system(const ScanResult& result, double temperature, double separation);
Environment cell_environment(const ScanResult& result, double temperature);

/// Evaluates every grid cell. Per-cell failures are recorded in place.
/// The result does not depend on the thread count.
ScanResult sweep(const SystemSpec& system, const Environment& env, const GridSpec& grid,
                 const ScanOptions& options = {});

/// Natural log of tau_g / tau_tc at one point of the sweep's parameter space.
double log_ratio_at(const ScanResult& result, double temperature, double separation);

/// Bisects every grid edge whose dominance flag changes until |ln(tau_g/tau_tc)| < tol,
/// then assembles polylines by marching squares. Segments in a square are
/// emitted in a fixed edge order; saddles pair (left, bottom) and (top, right).
/// Polylines start at the lexicographically smallest free end, (iT, iD, axis).
ScanResult refine_contour(ScanResult result, double tol = 1e-3);

/// Connected components of the dominance mask, scanned in (iT, iD) order.
std::vector<DominanceRegion> dominance_regions(const ScanResult& result);

}  // namespace deco
