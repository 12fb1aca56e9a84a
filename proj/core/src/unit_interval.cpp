#include "tis/unit_interval.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "tis/c1p.hpp"

namespace tis {

namespace {

BinaryMatrix closed_neighborhoods(const StaticGraph& graph) {
  std::vector<std::vector<std::size_t>> rows;
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    auto row = graph.neighbors(v);
    row.push_back(v);
    rows.push_back(std::move(row));
  }
  return BinaryMatrix(graph.vertex_count(), std::move(rows));
}

// Positions x_0 < ... < x_{n-1} (scaled by n+1) with x_j - x_i <= n+1 exactly
// when j <= reach[i]. Solved as a difference-constraint system.
// Consecutive components start at least 2 apart.
std::vector<std::int64_t> place_on_grid(const std::vector<std::size_t>& reach) {
  const std::size_t n = reach.size();
  const auto unit = static_cast<std::int64_t>(n + 1);
  struct Arc {
    std::size_t from, to;
    std::int64_t w;
  };
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // Nothing crosses a component boundary; separate components by 2.
    arcs.push_back({i + 1, i, reach[i] == i ? -2 * unit : -1});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[i] > i) arcs.push_back({i, reach[i], unit});
    if (reach[i] + 1 < n) arcs.push_back({reach[i] + 1, i, -unit - 1});
  }
  std::vector<std::int64_t> dist(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (const Arc& a : arcs) {
      if (dist[a.from] + a.w < dist[a.to]) {
        dist[a.to] = dist[a.from] + a.w;
        changed = true;
      }
    }
    if (!changed) {
      const std::int64_t low = n ? *std::min_element(dist.begin(), dist.end()) : 0;
      for (auto& d : dist) d -= low;
      return dist;
    }
  }
  throw std::logic_error("umbrella ordering has no unit realization");
}

} // namespace

UnitRecognition recognize_unit_interval(const StaticGraph& graph) {
  const std::size_t n = graph.vertex_count();
  UnitRecognition out;
  const BinaryMatrix matrix = closed_neighborhoods(graph);
  auto order = consecutive_ones_ordering(matrix);
  if (!order) {
    out.witness = minimal_non_c1p_columns(matrix);
    return out;
  }
  // Consecutive closed neighborhoods make the ordering an umbrella ordering.
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[(*order)[p]] = p;
  std::vector<std::size_t> reach(n);
  for (std::size_t p = 0; p < n; ++p) {
    const VertexIndex v = (*order)[p];
    reach[p] = p;
    for (VertexIndex u : graph.neighbors(v)) reach[p] = std::max(reach[p], pos[u]);
  }
  const auto x = place_on_grid(reach);
  const auto denom = static_cast<std::int64_t>(n + 1);
  std::vector<Interval> ivs(n);
  for (std::size_t p = 0; p < n; ++p) {
    Rational left(x[p], denom);
    ivs[(*order)[p]] = {left, left + Rational(1)};
  }
  IntervalModel model(std::move(ivs));
  if (!(model.graph() == graph)) throw std::logic_error("unit model does not re-induce the graph");
  out.model = std::move(model);
  return out;
}

} // namespace tis
