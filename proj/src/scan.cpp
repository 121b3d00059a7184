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

#include "deco/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <thread>
#include <tuple>

#include "deco/errors.hpp"

namespace deco {

std::vector<double> axis_values(const AxisSpec& axis) {
  if (!(axis.lo > 0.0) || !(axis.hi > axis.lo) || axis.count < 2) {
    throw DomainError("grid axis needs 0 < lo < hi and count >= 2");
  }
  std::vector<double> v(static_cast<std::size_t>(axis.count));
  const double log_lo = std::log(axis.lo);
  const double log_span = std::log(axis.hi) - log_lo;
  for (int i = 0; i < axis.count; ++i) {
    v[i] = std::exp(log_lo + log_span * i / (axis.count - 1));
  }
  v.front() = axis.lo;
  v.back() = axis.hi;
  return v;
}

void validate(const GridSpec& grid) {
  axis_values(grid.temperature);
  axis_values(grid.separation);
}

namespace {

template <typename F>
void parallel_for(std::size_t n, int threads, F&& body) {
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

SystemSpec cell_system(const ScanResult& result, double temperature, double separation) {
  SystemSpec s = result.system;
  s.internal_temperature = temperature;
  s.separation = separation;
  return s;
}

Environment cell_environment(const ScanResult& result, double temperature) {
  Environment e = result.environment;
  e.photon_temperature = result.options.photon_temperature.value_or(temperature);
  e.gas_temperature = result.options.gas_temperature.value_or(temperature);
  return e;
}

double log_ratio_at(const ScanResult& result, double temperature, double separation) {
  const DecoherenceSummary s = evaluate(cell_system(result, temperature, separation),
                                        cell_environment(result, temperature), result.options.cv_model,
                                        result.options.em_model);
  return std::log(s.tau_g) - std::log(s.tau_tc);
}

std::vector<DominanceRegion> dominance_regions(const ScanResult& result) {
  const std::size_t nt = result.temperatures.size();
  const std::size_t nd = result.separations.size();
  std::vector<char> seen(result.cells.size(), 0);
  std::vector<DominanceRegion> regions;
  auto eligible = [&](std::size_t idx) { return result.cells[idx].valid && result.cells[idx].dominant; };

  for (std::size_t start = 0; start < result.cells.size(); ++start) {
    if (seen[start] || !eligible(start)) continue;
    DominanceRegion region;
    region.temperature_min = region.separation_min = std::numeric_limits<double>::infinity();
    region.temperature_max = region.separation_max = -std::numeric_limits<double>::infinity();
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const std::size_t idx = queue.front();
      queue.pop_front();
      const std::size_t it = idx / nd;
      const std::size_t id = idx % nd;
      const CellRecord& c = result.cells[idx];
      ++region.cells;
      region.temperature_min = std::min(region.temperature_min, c.temperature);
      region.temperature_max = std::max(region.temperature_max, c.temperature);
      region.separation_min = std::min(region.separation_min, c.separation);
      region.separation_max = std::max(region.separation_max, c.separation);
      auto visit = [&](std::size_t j) {
        if (!seen[j] && eligible(j)) {
          seen[j] = 1;
          queue.push_back(j);
        }
      };
      if (it > 0) visit(idx - nd);
      if (it + 1 < nt) visit(idx + nd);
      if (id > 0) visit(idx - 1);
      if (id + 1 < nd) visit(idx + 1);
    }
    regions.push_back(region);
  }
  return regions;
}

ScanResult sweep(const SystemSpec& system, const Environment& env, const GridSpec& grid,
                 const ScanOptions& options) {
  ScanResult result;
  result.grid = grid;
  result.options = options;
  result.system = system;
  result.environment = env;
  result.temperatures = axis_values(grid.temperature);
  result.separations = axis_values(grid.separation);

  const std::size_t nt = result.temperatures.size();
  const std::size_t nd = result.separations.size();
  result.cells.resize(nt * nd);

  parallel_for(nt * nd, options.threads, [&](std::size_t idx) {
    CellRecord& c = result.cells[idx];
    c.temperature = result.temperatures[idx / nd];
    c.separation = result.separations[idx % nd];
    try {
      const DecoherenceSummary s = evaluate(cell_system(result, c.temperature, c.separation),
                                            cell_environment(result, c.temperature), options.cv_model,
                                            options.em_model);
      c.tau_g = s.tau_g;
      c.tau_tc = s.tau_tc;
      c.ratio = s.tau_g / s.tau_tc;
      c.dominant = s.dominant;
    } catch (const std::exception& e) {
      c.valid = false;
      c.dominant = false;
      c.tau_g = c.tau_tc = c.ratio = std::numeric_limits<double>::quiet_NaN();
      c.error = e.what();
    }
  });

  result.invalid_count = static_cast<std::size_t>(
      std::count_if(result.cells.begin(), result.cells.end(), [](const CellRecord& c) { return !c.valid; }));
  result.regions = dominance_regions(result);
  return result;
}

// ---------------------------------------------------------------------------
// Contours

namespace {

// axis 0: edge from (it, id) to (it, id + 1); axis 1: from (it, id) to (it + 1, id).
struct EdgeKey {
  std::size_t it;
  std::size_t id;
  int axis;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct EdgeCrossing {
  ContourPoint point;
  bool converged = false;
};

EdgeCrossing bisect_edge(const ScanResult& r, const EdgeKey& e, double tol) {
  const double t0 = r.temperatures[e.it];
  const double d0 = r.separations[e.id];
  const double t1 = e.axis == 1 ? r.temperatures[e.it + 1] : t0;
  const double d1 = e.axis == 0 ? r.separations[e.id + 1] : d0;
  const bool start_dominant = r.cell(e.it, e.id).dominant;

  // Log-space parameter s in [0, 1] along the edge.
  double lo = 0.0, hi = 1.0;
  EdgeCrossing out;
  for (int iter = 0; iter < 200; ++iter) {
    const double s = 0.5 * (lo + hi);
    const double t = std::exp(std::log(t0) + s * (std::log(t1) - std::log(t0)));
    const double d = std::exp(std::log(d0) + s * (std::log(d1) - std::log(d0)));
    double value;
    try {
      value = log_ratio_at(r, t, d);
    } catch (const std::exception&) {
      return out;
    }
    out.point = {t, d, value};
    if (std::abs(value) < tol) {
      out.converged = true;
      return out;
    }
    if (hi - lo < 1e-15) return out;
    const bool dominant_here = value < 0.0;
    (dominant_here == start_dominant ? lo : hi) = s;
  }
  return out;
}

}  // namespace

ScanResult refine_contour(ScanResult result, double tol) {
  if (!(tol > 0.0)) throw DomainError("refine_contour: tolerance must be > 0");
  result.contours.clear();
  result.contour_tolerance = tol;
  result.unconverged_edges = 0;

  const std::size_t nt = result.temperatures.size();
  const std::size_t nd = result.separations.size();
  auto crosses = [&](std::size_t it0, std::size_t id0, std::size_t it1, std::size_t id1) {
    const CellRecord& a = result.cell(it0, id0);
    const CellRecord& b = result.cell(it1, id1);
    return a.valid && b.valid && a.dominant != b.dominant;
  };

  std::vector<EdgeKey> edges;
  for (std::size_t it = 0; it < nt; ++it) {
    for (std::size_t id = 0; id < nd; ++id) {
      if (id + 1 < nd && crosses(it, id, it, id + 1)) edges.push_back({it, id, 0});
      if (it + 1 < nt && crosses(it, id, it + 1, id)) edges.push_back({it, id, 1});
    }
  }

  std::vector<EdgeCrossing> crossings(edges.size());
  parallel_for(edges.size(), result.options.threads,
               [&](std::size_t i) { crossings[i] = bisect_edge(result, edges[i], tol); });

  std::map<EdgeKey, ContourPoint> points;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (crossings[i].converged) {
      points.emplace(edges[i], crossings[i].point);
    } else {
      ++result.unconverged_edges;
    }
  }

  // Marching squares over squares whose four corners are valid.
  std::map<EdgeKey, std::vector<EdgeKey>> links;
  auto link = [&](const EdgeKey& a, const EdgeKey& b) {
    if (!points.count(a) || !points.count(b)) return;
    links[a].push_back(b);
    links[b].push_back(a);
  };
  for (std::size_t it = 0; it + 1 < nt; ++it) {
    for (std::size_t id = 0; id + 1 < nd; ++id) {
      if (!result.cell(it, id).valid || !result.cell(it, id + 1).valid || !result.cell(it + 1, id).valid ||
          !result.cell(it + 1, id + 1).valid) {
        continue;
      }
      const EdgeKey bottom{it, id, 0}, right{it, id + 1, 1}, top{it + 1, id, 0}, left{it, id, 1};
      std::vector<EdgeKey> crossing;
      if (crosses(it, id, it, id + 1)) crossing.push_back(bottom);
      if (crosses(it, id + 1, it + 1, id + 1)) crossing.push_back(right);
      if (crosses(it + 1, id, it + 1, id + 1)) crossing.push_back(top);
      if (crosses(it, id, it + 1, id)) crossing.push_back(left);
      if (crossing.size() == 2) {
        link(crossing[0], crossing[1]);
      } else if (crossing.size() == 4) {
        link(left, bottom);
        link(top, right);
      }
    }
  }

  // Each crossing edge borders at most two squares, so every node has degree
  // 1 (open end) or 2. Open chains go first, the remaining nodes form loops.
  std::map<EdgeKey, bool> visited;
  auto walk = [&](const EdgeKey& start, bool closed) {
    Polyline line;
    line.closed = closed;
    EdgeKey cur = start;
    for (;;) {
      visited[cur] = true;
      line.points.push_back(points.at(cur));
      const auto& next = links[cur];
      auto step = std::find_if(next.begin(), next.end(), [&](const EdgeKey& n) { return !visited[n]; });
      if (step == next.end()) break;
      cur = *step;
    }
    if (closed) line.points.push_back(line.points.front());
    return line;
  };

  for (const auto& [key, neighbours] : links) {
    if (!visited[key] && neighbours.size() == 1) result.contours.push_back(walk(key, false));
  }
  for (const auto& [key, neighbours] : links) {
    if (!visited[key]) result.contours.push_back(walk(key, true));
  }
  return result;
}

}  // namespace deco
