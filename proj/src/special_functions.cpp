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

#include "deco/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "deco/constants.hpp"
#include "deco/errors.hpp"

namespace deco {

std::complex<double> clausius_mossotti(const ComplexPermittivity& eps) {
  if (eps.re == -2.0 && eps.im == 0.0) {
    throw SingularityError("clausius_mossotti: pole at eps = -2");
  }
  const std::complex<double> e = eps.value();
  return (e - 1.0) / (e + 2.0);
}

double zeta(double s) {
  if (!(s > 1.0)) {
    throw DomainError("zeta: argument must exceed 1, got " + std::to_string(s));
  }
  if (s == 1.5) return constants::zeta_3_2;
  if (s == 3.0) return constants::zeta_3;
  if (s == 9.0) return constants::zeta_9;
  throw DomainError("zeta: only s in {3/2, 3, 9} is tabulated, got " + std::to_string(s));
}

namespace {

constexpr double kInvSqrtPi = 0.56418958354775628694807945156077;

// Laplace continued fraction
//   sqrt(pi) erfcx(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm. Converges in < 60 terms for x >= 2.
double erfcx_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int n = 1; n < 500; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < eps) break;
  }
  return kInvSqrtPi / f;
}

// 1/(x sqrt(pi)) * (1 - 1/(2x^2) + 3/(4x^4) - 15/(8x^6) + 105/(16x^8))
double erfcx_asymptotic(double x) {
  const double y = 1.0 / (2.0 * x) / x;
  const double series = 1.0 - y * (1.0 - 3.0 * y * (1.0 - 5.0 * y * (1.0 - 7.0 * y)));
  return kInvSqrtPi / x * series;
}

}  // namespace

double erfcx(double x) {
  if (!(x >= 0.0)) {
    throw DomainError("erfcx: argument must be >= 0");
  }
  if (std::isinf(x)) return 0.0;
  if (x < 2.0) return std::exp(x * x) * std::erfc(x);
  if (x < 1e4) return erfcx_continued_fraction(x);
  return erfcx_asymptotic(x);
}

}  // namespace deco
