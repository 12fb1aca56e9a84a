#include "tis/conflict.hpp"

#include <stdexcept>

#include "tis/errors.hpp"
#include "tis/solvers.hpp"

namespace tis {

std::optional<WindowSemantics> parse_window_semantics(std::string_view text) {
  if (text == "figure") return WindowSemantics::Figure;
  if (text == "formula") return WindowSemantics::Formula;
  return std::nullopt;
}

std::string_view to_string(WindowSemantics semantics) {
  return semantics == WindowSemantics::Figure ? "figure" : "formula";
}

std::vector<Window> windows(int tau, int delta, WindowSemantics semantics) {
  if (tau < 1 || delta < 1) throw std::invalid_argument("tau and delta must be positive");
  std::vector<Window> out;
  if (semantics == WindowSemantics::Figure) {
    if (delta >= tau) return {Window{1, tau}};
    for (int i = 1; i <= tau - delta + 1; ++i) out.push_back({i, i + delta - 1});
    return out;
  }
  if (tau - delta < 1) return {Window{1, tau}};
  for (int i = 1; i <= tau - delta; ++i) out.push_back({i, i + delta});
  return out;
}

StaticGraph conflict_graph(const TemporalInstance& inst, WindowSemantics semantics) {
  StaticGraph result(inst.size());
  for (const Window& w : windows(inst.tau(), inst.delta(), semantics)) {
    StaticGraph common = layer_graph(inst, w.first);
    for (int t = w.first + 1; t <= w.last; ++t) common = edge_intersection(common, layer_graph(inst, t));
    result = edge_union(result, common);
  }
  return result;
}

IndependenceReport delta_independence_check(const TemporalInstance& inst, std::span<const VertexIndex> selected,
                                            WindowSemantics semantics) {
  for (VertexIndex v : selected) {
    if (v >= inst.size()) throw UnknownVertex("#" + std::to_string(v));
  }
  IndependenceReport report;
  const auto wins = windows(inst.tau(), inst.delta(), semantics);
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (std::size_t j = i + 1; j < selected.size(); ++j) {
      const VertexIndex u = selected[i];
      const VertexIndex v = selected[j];
      if (u == v) continue;
      for (const Window& w : wins) {
        int witness = 0;
        for (int t = w.first; t <= w.last && witness == 0; ++t) {
          if (!layer_graph(inst, t).adjacent(u, v)) witness = t;
        }
        if (witness == 0) {
          report.independent = false;
          report.violation = Edge::make(u, v);
          report.violation_window = w;
          return report;
        }
        report.certificate.push_back({u, v, w, witness});
      }
    }
  }
  return report;
}

std::size_t neighborhood_bound(int tau, int delta) {
  const int tracks = delta >= tau ? 1 : tau - delta + 1;
  return (std::size_t{1} << delta) * static_cast<std::size_t>(tracks);
}

std::size_t closed_neighborhood_mis(const StaticGraph& graph, VertexIndex v) {
  std::vector<VertexIndex> closed = graph.neighbors(v);
  closed.insert(closed.begin(), v);
  StaticGraph sub = graph.induced(closed);
  return max_weight_independent_set(sub, std::vector<Rational>(closed.size(), Rational(1))).selected.size();
}

bool neighborhood_is_bound_check(const TemporalInstance& inst, VertexIndex v) {
  if (!inst.unit()) throw NonUnitInstance("neighborhood bound is only defined for unit interval instances");
  if (v >= inst.size()) throw UnknownVertex("#" + std::to_string(v));
  const StaticGraph g = conflict_graph(inst);
  return closed_neighborhood_mis(g, v) <= neighborhood_bound(inst.tau(), inst.delta());
}

} // namespace tis
