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
#include <string>
#include <vector>

#include <doctest.h>

#include "deco/catalog.hpp"
#include "deco/errors.hpp"
#include "deco/scan.hpp"
#include "test_util.hpp"

using namespace deco;
using deco::testing::rel;

namespace {

struct Setup {
  SystemSpec system;
  Environment env;
};

Setup sapphire(double radius) {
  const Catalog& c = builtin_catalog();
  const auto& p = c.preset("sapphire");
  Setup s{c.system_for(p), c.environment_for(p)};
  s.system.radius = radius;
  return s;
}

const GridSpec kFig{{1e-3, 1e2, 200}, {1e-18, 1.0, 200}};

bool same_cells(const ScanResult& a, const ScanResult& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const auto &x = a.cells[i], &y = b.cells[i];
    if (x.temperature != y.temperature || x.separation != y.separation || x.tau_g != y.tau_g ||
        x.tau_tc != y.tau_tc || x.ratio != y.ratio || x.dominant != y.dominant || x.valid != y.valid)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("axis values") {
  const auto v = axis_values({1e-3, 1e2, 6});
  REQUIRE(v.size() == 6);
  CHECK(v.front() == 1e-3);
  CHECK(v.back() == 1e2);
  CHECK(rel(v[1], 1e-2) < 1e-14);
  CHECK_THROWS_AS(axis_values({0.0, 1.0, 5}), DomainError);
  CHECK_THROWS_AS(axis_values({1.0, 1.0, 5}), DomainError);
  CHECK_THROWS_AS(axis_values({1.0, 2.0, 1}), DomainError);
}

TEST_CASE("sweep records every cell in temperature-major order") {
  const auto s = sapphire(1e-6);
  const auto r = sweep(s.system, s.env, {{1.0, 10.0, 2}, {1e-3, 1e-2, 2}});
  REQUIRE(r.cells.size() == 4);
  CHECK(r.cell(0, 1).temperature == 1.0);
  CHECK(r.cell(0, 1).separation == 1e-2);
  CHECK(r.cell(1, 0).temperature == 10.0);
  for (const auto& c : r.cells) {
    CHECK(c.valid);
    CHECK(c.dominant == (c.tau_g < c.tau_tc));
    CHECK(c.ratio == c.tau_g / c.tau_tc);
    const auto e = evaluate(cell_system(r, c.temperature, c.separation), cell_environment(r, c.temperature),
                            r.options.cv_model, r.options.em_model);
    CHECK(e.tau_g == c.tau_g);
    CHECK(e.tau_tc == c.tau_tc);
  }
  const auto refined = refine_contour(r);
  CHECK(refined.contours.empty());
}

TEST_CASE("temperatures track the grid unless pinned") {
  const auto s = sapphire(1e-6);
  ScanOptions opt;
  auto r = sweep(s.system, s.env, {{1.0, 10.0, 2}, {1e-3, 1e-2, 2}}, opt);
  CHECK(cell_environment(r, 7.0).photon_temperature == 7.0);
  CHECK(cell_environment(r, 7.0).gas_temperature == 7.0);
  CHECK(cell_system(r, 7.0, 3e-3).internal_temperature == 7.0);
  opt.photon_temperature = 300.0;
  opt.gas_temperature = 4.0;
  r = sweep(s.system, s.env, {{1.0, 10.0, 2}, {1e-3, 1e-2, 2}}, opt);
  CHECK(cell_environment(r, 7.0).photon_temperature == 300.0);
  CHECK(cell_environment(r, 7.0).gas_temperature == 4.0);
}

TEST_CASE("invalid cells are recorded, not thrown") {
  auto s = sapphire(1e-6);
  s.system.material.permittivity = {-2.0, 0.0};  // Clausius-Mossotti pole
  const auto r = sweep(s.system, s.env, {{1.0, 10.0, 3}, {1e-3, 1e-2, 3}});
  CHECK(r.invalid_count == 9);
  for (const auto& c : r.cells) {
    CHECK_FALSE(c.valid);
    CHECK(c.error.find("scattering") != std::string::npos);
  }
  CHECK(r.regions.empty());
}

TEST_CASE("parallel and serial sweeps agree exactly") {
  const auto s = sapphire(1e-8);
  ScanOptions serial, parallel;
  serial.threads = 1;
  parallel.threads = 4;
  const GridSpec g{{1e-3, 1e2, 60}, {1e-18, 1.0, 70}};
  const auto a = refine_contour(sweep(s.system, s.env, g, serial));
  const auto b = refine_contour(sweep(s.system, s.env, g, parallel));
  CHECK(same_cells(a, b));
  REQUIRE(a.contours.size() == b.contours.size());
  for (std::size_t i = 0; i < a.contours.size(); ++i) {
    REQUIRE(a.contours[i].points.size() == b.contours[i].points.size());
    for (std::size_t j = 0; j < a.contours[i].points.size(); ++j) {
      CHECK(a.contours[i].points[j].temperature == b.contours[i].points[j].temperature);
      CHECK(a.contours[i].points[j].separation == b.contours[i].points[j].separation);
    }
  }
}

TEST_CASE("dominance counts are invariant under transposition") {
  const auto s = sapphire(1e-8);
  const auto r = sweep(s.system, s.env, {{1e-3, 1e2, 50}, {1e-18, 1.0, 80}});
  // Swap the axes of the record, keeping every cell.
  ScanResult t = r;
  std::swap(t.temperatures, t.separations);
  const std::size_t nt = r.temperatures.size(), nd = r.separations.size();
  for (std::size_t it = 0; it < nt; ++it)
    for (std::size_t id = 0; id < nd; ++id) t.cells[id * nt + it] = r.cells[it * nd + id];
  std::size_t da = 0, db = 0;
  for (const auto& c : r.cells) da += c.dominant;
  for (const auto& c : t.cells) db += c.dominant;
  CHECK(da == db);
  const auto ra = dominance_regions(r), rb = dominance_regions(t);
  REQUIRE(ra.size() == rb.size());
  std::size_t sa = 0, sb = 0;
  for (const auto& x : ra) sa += x.cells;
  for (const auto& x : rb) sb += x.cells;
  CHECK(sa == sb);
  CHECK(sa == da);
}

TEST_CASE("region counting uses 4-connectivity") {
  const auto s = sapphire(1e-6);
  ScanResult r = sweep(s.system, s.env, {{1.0, 10.0, 3}, {1e-3, 1e-2, 3}});
  for (auto& c : r.cells) c.dominant = false;
  // diagonal neighbours only: two regions
  r.cells[0].dominant = true;
  r.cells[4].dominant = true;
  CHECK(dominance_regions(r).size() == 2);
  r.cells[1].dominant = true;
  CHECK(dominance_regions(r).size() == 1);
}

TEST_CASE("log ratio slopes along a fixed-temperature slice") {
  const auto s = sapphire(1e-6);
  const auto r = sweep(s.system, s.env, {{1.0, 10.0, 2}, {1e-3, 1e-2, 2}});
  auto slope = [&](double d0, double d1) {
    return (log_ratio_at(r, 1.0, d1) - log_ratio_at(r, 1.0, d0)) / (std::log(d1) - std::log(d0));
  };
  CHECK(std::abs(slope(1e-18, 1e-17) - 1.0) < 0.01);
  CHECK(std::abs(slope(1e-6, 1e-5) + 1.0) < 0.01);
}

TEST_CASE("contour points satisfy the tolerance") {
  const auto s = sapphire(1e-8);
  const double tol = 1e-3;
  const auto r = refine_contour(sweep(s.system, s.env, {{1e-3, 1e2, 40}, {1e-18, 1.0, 40}}), tol);
  REQUIRE_FALSE(r.contours.empty());
  CHECK(r.unconverged_edges == 0);
  for (const auto& line : r.contours) {
    CHECK(line.points.size() >= 2);
    if (line.closed) CHECK(line.points.front().temperature == line.points.back().temperature);
    for (const auto& p : line.points) {
      CHECK(std::abs(p.log_ratio) < tol);
      CHECK(std::abs(log_ratio_at(r, p.temperature, p.separation)) < tol);
    }
  }
}

TEST_CASE("single crossing on a monotone slice") {
  const auto s = sapphire(1e-6);
  const double t = 50.0;
  const auto r = refine_contour(sweep(s.system, s.env, {{t, 60.0, 2}, {1e-18, 1.0, 60}}));
  // oracle: plain bisection in log dx on the slice
  double lo = std::log(1e-18), hi = std::log(1.0);
  REQUIRE(log_ratio_at(r, t, std::exp(lo)) < 0.0);
  REQUIRE(log_ratio_at(r, t, std::exp(hi)) > 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (log_ratio_at(r, t, std::exp(mid)) < 0.0 ? lo : hi) = mid;
  }
  const double root = std::exp(0.5 * (lo + hi));

  std::vector<ContourPoint> on_slice;
  for (const auto& line : r.contours)
    for (const auto& p : line.points)
      if (rel(p.temperature, t) < 1e-12) on_slice.push_back(p);
  REQUIRE(on_slice.size() == 1);
  CHECK(std::abs(std::log(on_slice[0].separation / root)) < 2e-3);
}

TEST_CASE("figure-scale maps") {
  SUBCASE("r = 1e-6 m: dominance confined to small separations") {
    const auto s = sapphire(1e-6);
    const auto r = sweep(s.system, s.env, kFig);
    REQUIRE(r.regions.size() >= 1);
    for (const auto& reg : r.regions) CHECK(reg.separation_max < 1e-10);
    CHECK(r.invalid_count == 0);
  }
  SUBCASE("r = 1e-8 m: two disjoint regions") {
    const auto s = sapphire(1e-8);
    const auto r = sweep(s.system, s.env, kFig);
    CHECK(r.regions.size() == 2);
  }
}
