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

#include "deco/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "deco/errors.hpp"

namespace deco {
namespace {

// 21-point Kronrod abscissae (positive half) and weights, with the embedded
// 10-point Gauss weights on the odd-indexed nodes. Values from QUADPACK qk21.
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208929859581, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  double abs_value;
};

Segment gauss_kronrod_21(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kWgk[10];
  double gauss = 0.0;
  double abs_sum = std::abs(kronrod);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  Segment s{lo, hi, kronrod * half, std::abs((kronrod - gauss) * half), abs_sum * std::abs(half)};
  if (!std::isfinite(s.value)) {
    throw DomainError("integrate: integrand is not finite on [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  return s;
}

QuadratureResult adapt(const Integrand& f, std::vector<Segment> segments, const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0) || spec.max_refinements < 1) {
    throw DomainError("integrate: rel_tol must be > 0 and max_refinements >= 1");
  }
  auto totals = [&segments] {
    double value = 0.0, error = 0.0, abs_value = 0.0;
    for (const auto& s : segments) {
      value += s.value;
      error += s.error;
      abs_value += s.abs_value;
    }
    return std::array<double, 3>{value, error, abs_value};
  };

  for (int refinement = 0;; ++refinement) {
    const auto [value, error, abs_value] = totals();
    // The floor keeps requests below double resolution from spinning forever.
    const double target = std::max({spec.abs_tol, spec.rel_tol * std::abs(value),
                                    50.0 * std::numeric_limits<double>::epsilon() * abs_value});
    if (error <= target) {
      return {value, error, static_cast<int>(segments.size())};
    }
    if (refinement >= spec.max_refinements) {
      throw ConvergenceError("integrate: tolerance not reached after " +
                                 std::to_string(spec.max_refinements) + " refinements",
                             value, error);
    }
    // First segment with the largest error; ties resolve to the lowest index.
    auto worst = std::max_element(segments.begin(), segments.end(),
                                  [](const Segment& a, const Segment& b) { return a.error < b.error; });
    const Segment parent = *worst;
    const double mid = 0.5 * (parent.lo + parent.hi);
    *worst = gauss_kronrod_21(f, parent.lo, mid);
    segments.insert(worst + 1, gauss_kronrod_21(f, mid, parent.hi));
  }
}

}  // namespace

QuadratureResult integrate(const Integrand& f, Interval domain, const QuadratureSpec& spec) {
  const double points[2] = {domain.lo, domain.hi};
  return integrate(f, std::span<const double>(points), spec);
}

QuadratureResult integrate(const Integrand& f, std::span<const double> breakpoints,
                           const QuadratureSpec& spec) {
  if (breakpoints.size() < 2) {
    throw DomainError("integrate: need at least two breakpoints");
  }
  std::vector<Segment> segments;
  segments.reserve(breakpoints.size() - 1);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double lo = breakpoints[i];
    const double hi = breakpoints[i + 1];
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
      throw DomainError("integrate: breakpoints must be finite and sorted");
    }
    if (hi > lo) segments.push_back(gauss_kronrod_21(f, lo, hi));
  }
  if (segments.empty()) return {};
  return adapt(f, std::move(segments), spec);
}

QuadratureResult integrate(const Integrand& f, HalfLine domain, const QuadratureSpec& spec) {
  if (!std::isfinite(domain.lo) || !(domain.scale > 0.0)) {
    throw DomainError("integrate: half line needs a finite origin and a positive scale");
  }
  const double lo = domain.lo;
  const double scale = domain.scale;
  // x = lo - scale*log(1-t), dx = scale/(1-t) dt. Kronrod nodes never touch t = 1.
  const Integrand mapped = [&f, lo, scale](double t) {
    const double one_minus_t = 1.0 - t;
    const double x = lo - scale * std::log1p(-t);
    const double fx = f(x);
    if (fx == 0.0) return 0.0;
    return fx * scale / one_minus_t;
  };
  return integrate(mapped, Interval{0.0, 1.0}, spec);
}

}  // namespace deco
