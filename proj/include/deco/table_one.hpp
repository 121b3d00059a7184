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

#include "deco/catalog.hpp"

namespace deco {

/// Order of magnitude as the scientific-notation exponent, floor(log10 x).
int decade(double value);

/// One compared quantity of a benchmark row.
struct DecadeComparison {
  std::string quantity;  // "tau_g_debye", "tau_g_einstein", "tau_tc"
  double computed = 0.0;
  int computed_decade = 0;
  int reference_decade = 0;
  bool match = false;  // |computed_decade - reference_decade| <= 1
  // Filled for mismatches: radius that would bring the value onto the
  // reference decade, and whether that radius stays within a factor sqrt(10)
  // of the preset radius (an order-of-magnitude radius specification).
  std::optional<double> required_radius;
  bool explained_by_radius = false;
  std::string note;
};

struct BenchmarkRow {
  std::string preset;
  std::string convention;  // molecule-count convention used
  double radius = 0.0;
  double separation = 0.0;
  double dof = 0.0;
  std::optional<int> experiment_time_decade;
  std::vector<DecadeComparison> comparisons;
  bool flagged = false;  // any mismatch
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;
};

/// Reference decades of the five benchmark experiments.
struct BenchmarkReference {
  std::string preset;
  std::optional<int> experiment_time;
  int tau_g_debye;
  int tau_tc;
  std::optional<int> tau_g_einstein;
};

const std::vector<BenchmarkReference>& benchmark_references();

/// tau_G with the Debye and classical heat capacities and tau_TC with
/// emission Model 1 for each benchmark preset, compared decade by decade.
/// Presets with an alternative molecule count produce a second row.
BenchmarkReport table_one(const Catalog& catalog = builtin_catalog());

}  // namespace deco
