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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "deco/constants.hpp"
#include "deco/errors.hpp"
#include "deco/quadrature.hpp"
#include "test_util.hpp"

using namespace deco;
using deco::testing::rel;

namespace {

double debye_integrand(double x) {
  if (x < 1e-6) return x * x;  // x^4 e^x / (e^x - 1)^2 -> x^2
  const double em1 = std::expm1(x);
  return std::pow(x, 4) * std::exp(x) / (em1 * em1);
}

// Trapezoid rule on [0, 60] with Richardson extrapolation from two step sizes.
double debye_trapezoid() {
  auto trap = [](int n) {
    const double h = 60.0 / n;
    double s = 0.5 * (debye_integrand(0.0) + debye_integrand(60.0));
    for (int i = 1; i < n; ++i) s += debye_integrand(i * h);
    return s * h;
  };
  const double a = trap(200000), b = trap(400000);
  return b + (b - a) / 3.0;
}

}  // namespace

TEST_CASE("integrate basic cases") {
  CHECK(std::abs(integrate([](double x) { return x; }, Interval{0.0, 1.0}).value - 0.5) < 1e-15);
  CHECK(rel(integrate([](double x) { return std::exp(-x); }, HalfLine{}).value, 1.0) < 1e-10);
  CHECK(rel(integrate([](double x) { return std::sin(x); }, Interval{0.0, constants::pi}).value, 2.0) < 1e-12);
}

TEST_CASE("Debye integral on the half line") {
  const double exact = 4.0 * std::pow(constants::pi, 4) / 15.0;
  const auto q = integrate(debye_integrand, HalfLine{0.0, 4.0}, kOracleQuadrature);
  CHECK(std::abs(q.value - 25.97576) < 1e-5);
  CHECK(rel(q.value, exact) < 1e-10);
  // tail beyond 60 is below 1e-19
  CHECK(rel(debye_trapezoid(), exact) < 1e-9);
}

TEST_CASE("breakpoints and reported error") {
  const std::vector<double> bp{0.0, 0.5, 1.0, 3.0};
  const auto q = integrate([](double x) { return std::abs(x - 0.5); }, bp);
  CHECK(rel(q.value, 0.125 + 3.125) < 1e-12);
  CHECK(q.error >= 0.0);
  CHECK(q.intervals >= 3);
}

TEST_CASE("integrate is deterministic") {
  auto f = [](double x) { return std::exp(-x) * std::cos(3 * x) * x * x; };
  const auto a = integrate(f, HalfLine{0.0, 1.0}, kOracleQuadrature);
  const auto b = integrate(f, HalfLine{0.0, 1.0}, kOracleQuadrature);
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);
  CHECK(a.intervals == b.intervals);
}

TEST_CASE("non-convergence carries the best estimate") {
  QuadratureSpec tight{1e-15, 0.0, 2};
  try {
    integrate([](double x) { return 1.0 / std::sqrt(x); }, Interval{0.0, 1.0}, tight);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_bound() > 0.0);
    CHECK(std::abs(e.best_estimate() - 2.0) < 0.5);
  }
}

TEST_CASE("non-finite integrand is a domain error") {
  CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, Interval{0.0, 1.0}), DomainError);
}
