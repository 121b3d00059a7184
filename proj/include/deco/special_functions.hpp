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

#include <complex>

namespace deco {

/// Complex relative permittivity of a passive dielectric (im >= 0).
struct ComplexPermittivity {
  double re = 1.0;
  double im = 0.0;

  constexpr std::complex<double> value() const { return {re, im}; }
  friend constexpr bool operator==(const ComplexPermittivity&, const ComplexPermittivity&) = default;
};

/// Clausius-Mossotti factor (eps - 1) / (eps + 2).
/// Throws SingularityError at eps = -2 + 0i.
std::complex<double> clausius_mossotti(const ComplexPermittivity& eps);

/// Riemann zeta for the arguments used by the rate formulas: 3/2, 3 and 9.
/// Other arguments > 1 throw DomainError (no general zeta is provided);
/// s <= 1 throws DomainError as well.
double zeta(double s);

/// Scaled complementary error function exp(x^2) * erfc(x) for x >= 0.
/// Never overflows; relative error below 1e-12 on [0, 1e8] and beyond.
double erfcx(double x);

}  // namespace deco
