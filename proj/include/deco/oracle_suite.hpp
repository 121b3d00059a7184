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

#include <string>
#include <utility>
#include <vector>

namespace deco::oracle {

/// One closed-form vs quadrature check.
struct Comparison {
  std::string name;
  std::vector<std::pair<std::string, double>> parameters;
  double closed_form = 0.0;
  double numeric = 0.0;
  double relative_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Model-2 emission at one lambda = C_V / k_B. The deviation is informational.
struct Model2Entry {
  double lambda_cv = 0.0;
  double closed_form = 0.0;
  double integral = 0.0;
  double integral_error = 0.0;
  double exact_reduction = 0.0;           // NaN above kExactReductionMaxLambda
  double relative_deviation = 0.0;       // |closed - integral| / integral
  double reduction_deviation = 0.0;      // |reduction - integral| / integral
  double engine_value = 0.0;             // what lambda_em returns
  bool discrepancy = false;
};

struct VerificationReport {
  std::vector<Comparison> comparisons;
  std::vector<Model2Entry> model2;
  double model2_radius = 0.0;
  double model2_temperature = 0.0;
  bool all_passed = false;  // every entry of `comparisons`
};

/// Temperatures and gases of the verification grid.
inline constexpr double kVerificationTemperatures[] = {1e-9, 0.03, 4.0, 300.0};
inline constexpr double kModel2Lambdas[] = {1e-3, 1.0, 10.0, 1e3, 1e6, 1e9};
inline constexpr double kExactReductionMaxLambda = 10.0;

/// Runs every oracle comparison: Bose-Einstein normalization (1e-10),
/// first and third momentum moments and the collisional localization rate
/// (1e-8), over the temperature grid for N2 and O2, plus the Model-2 emission
/// report. Throws ConvergenceError if a quadrature fails.
VerificationReport verify_all();

}  // namespace deco::oracle
