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

#include <functional>
#include <span>

namespace deco {

/// Stopping rule for adaptive quadrature. The estimate is accepted once the
/// summed error bound drops below max(abs_tol, rel_tol * |estimate|).
struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  int max_refinements = 400;  // number of interval bisections allowed
};

/// Tighter rule used by the oracle suite.
inline constexpr QuadratureSpec kOracleQuadrature{1e-10, 0.0, 2000};

struct Interval {
  double lo;
  double hi;
};

/// [lo, inf). `scale` is the decay length of the integrand; the half line is
/// mapped onto [0, 1) with x = lo - scale * log(1 - t).
struct HalfLine {
  double lo = 0.0;
  double scale = 1.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod quadrature on a finite interval.
/// Throws ConvergenceError when max_refinements is exhausted.
QuadratureResult integrate(const Integrand& f, Interval domain, const QuadratureSpec& spec = {});

/// Same scheme over initial sub-intervals [b0,b1], [b1,b2], ...
/// `breakpoints` must be sorted and contain at least two entries.
QuadratureResult integrate(const Integrand& f, std::span<const double> breakpoints,
                           const QuadratureSpec& spec = {});

/// Semi-infinite domain. f must decay at least exponentially.
QuadratureResult integrate(const Integrand& f, HalfLine domain, const QuadratureSpec& spec = {});

}  // namespace deco
