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

#include "deco/oracle_suite.hpp"

#include <cmath>
#include <limits>

#include "deco/catalog.hpp"
#include "deco/channels.hpp"
#include "deco/constants.hpp"
#include "deco/oracle.hpp"

namespace deco::oracle {

namespace {

Comparison make(std::string name, std::vector<std::pair<std::string, double>> params, double closed,
                double numeric, double tolerance, bool absolute = false) {
  Comparison c;
  c.name = std::move(name);
  c.parameters = std::move(params);
  c.closed_form = closed;
  c.numeric = numeric;
  c.relative_deviation = absolute ? std::abs(numeric - closed) : std::abs(numeric - closed) / std::abs(closed);
  c.tolerance = tolerance;
  c.pass = c.relative_deviation < tolerance;
  return c;
}

}  // namespace

VerificationReport verify_all() {
  VerificationReport report;
  const Catalog& catalog = builtin_catalog();
  constexpr double pressure = 1e-15;  // Pa
  constexpr double radius = 1e-6;     // m

  for (const char* gas_name : {"N2", "O2"}) {
    const GasSpecies& gas = catalog.species(gas_name);
    const double m = gas.molecular_mass;
    for (double t : kVerificationTemperatures) {
      const std::vector<std::pair<std::string, double>> params = {{"gas_mass_kg", m}, {"temperature_K", t}};
      const std::string suffix = std::string("[") + gas_name + "]";

      report.comparisons.push_back(
          make("nu_normalization" + suffix, params, 1.0, momentum_moment(0, m, t), 1e-10, true));
      report.comparisons.push_back(make("moment_p1" + suffix, params, momentum_moment_closed_form(1, m, t),
                                        momentum_moment(1, m, t), 1e-8));
      report.comparisons.push_back(make("moment_p3" + suffix, params, momentum_moment_closed_form(3, m, t),
                                        momentum_moment(3, m, t), 1e-8));

      const double n = pressure / (constants::k_B * t);
      auto coll_params = params;
      coll_params.emplace_back("radius_m", radius);
      coll_params.emplace_back("number_density_m3", n);
      report.comparisons.push_back(make("lambda_coll" + suffix, coll_params,
                                        lambda_coll_number_density(radius, m, n, t),
                                        lambda_coll_numeric(radius, m, n, t), 1e-8));
    }
  }

  // The Model-2 deviation is a pure function of lambda; r, T and eps only scale it.
  const Material& sapphire = catalog.material("sapphire");
  report.model2_radius = radius;
  report.model2_temperature = 300.0;
  for (double lambda : kModel2Lambdas) {
    Model2Entry e;
    e.lambda_cv = lambda;
    const double cv = lambda * constants::k_B;
    e.closed_form = lambda_em2_closed_form(radius, 300.0, sapphire.permittivity, cv);
    const QuadratureResult q = lambda_em2_integral(radius, 300.0, sapphire.permittivity, lambda);
    e.integral = q.value;
    e.integral_error = q.error;
    e.relative_deviation = std::abs(e.closed_form - e.integral) / e.integral;
    // The reduction cancels catastrophically once lambda^5 terms swamp the
    // O(1) result; it is only reported where that loss is below ~1e-10.
    if (lambda <= kExactReductionMaxLambda) {
      e.exact_reduction = lambda_em2_exact_reduction(radius, 300.0, sapphire.permittivity, lambda);
      e.reduction_deviation = std::abs(e.exact_reduction - e.integral) / e.integral;
    } else {
      e.exact_reduction = e.reduction_deviation = std::numeric_limits<double>::quiet_NaN();
    }
    const EmissionResult engine = lambda_em(EmissionModel::Model2, radius, 300.0, sapphire.permittivity, cv);
    e.engine_value = engine.lambda;
    e.discrepancy = engine.discrepancy;
    report.model2.push_back(e);
  }

  report.all_passed = true;
  for (const auto& c : report.comparisons) report.all_passed = report.all_passed && c.pass;
  return report;
}

}  // namespace deco::oracle
