#include "tis/order_preservation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "tis/c1p.hpp"
#include "tis/errors.hpp"

namespace tis {

CliqueMatrix pooled_clique_matrix(const TemporalInstance& inst) {
  CliqueMatrix out;
  out.vertex_count = inst.size();
  std::set<Clique> seen;
  for (int t = 0; t < inst.tau(); ++t) {
    std::vector<Clique> cliques;
    if (inst.mode() == LayerMode::Model) {
      cliques = maximal_cliques(inst.models()[t]);
    } else {
      auto found = maximal_cliques_abstract(inst.graphs()[t]);
      if (!found) throw NotIntervalLayer("layer " + std::to_string(t + 1) + " is not an interval graph");
      cliques = std::move(*found);
    }
    for (auto& c : cliques) {
      if (seen.insert(c).second) {
        out.rows.push_back(std::move(c));
        out.row_layer.push_back(t + 1);
      }
    }
  }
  return out;
}

std::optional<VertexOrdering> find_common_ordering(const TemporalInstance& inst) {
  auto order = consecutive_ones_ordering(pooled_clique_matrix(inst).as_matrix());
  if (!order) return std::nullopt;
  VertexOrdering ordering(std::move(*order));
  for (const StaticGraph& g : inst.graphs()) {
    if (!try_normalize_to_ordering(g, ordering).model) return std::nullopt;
  }
  return ordering;
}

namespace {

bool preserves_order(const TemporalInstance& inst, const std::vector<VertexIndex>& keep) {
  return find_common_ordering(inst.restricted(keep)).has_value();
}

} // namespace

OrderPreservationReport recognize_order_preserving(const TemporalInstance& inst) {
  if (!inst.unit()) throw NonUnitInstance("order-preservation recognition needs unit interval layers");
  OrderPreservationReport report;
  const CliqueMatrix pooled = pooled_clique_matrix(inst);
  const BinaryMatrix matrix = pooled.as_matrix();
  if (auto order = consecutive_ones_ordering(matrix)) {
    VertexOrdering ordering(std::move(*order));
    for (const StaticGraph& g : inst.graphs()) {
      // Cliques consecutive in a unit layer make the ordering an umbrella ordering.
      if (!try_normalize_to_ordering(g, ordering).model) {
        throw std::logic_error("C1P ordering does not normalize a unit layer");
      }
    }
    report.is_order_preserving = true;
    report.ordering = std::move(ordering);
    return report;
  }

  std::vector<VertexIndex> current(inst.size());
  for (VertexIndex v = 0; v < inst.size(); ++v) current[v] = v;
  // The column witness is a cheap starting point when it still fails after
  // re-extracting cliques on its own vertices.
  auto columns = minimal_non_c1p_columns(matrix);
  if (!preserves_order(inst, columns)) current = std::move(columns);
  for (std::size_t i = 0; i < current.size();) {
    std::vector<VertexIndex> smaller = current;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (!preserves_order(inst, smaller)) {
      current = std::move(smaller);
    } else {
      ++i;
    }
  }
  report.witness = std::move(current);
  return report;
}

IntervalModel conflict_interval_model(const TemporalInstance& inst, const VertexOrdering& ordering,
                                      WindowSemantics semantics) {
  const std::size_t n = inst.size();
  if (ordering.size() != n) throw std::invalid_argument("ordering size does not match instance");
  std::vector<IntervalModel> normalized;
  for (const StaticGraph& g : inst.graphs()) normalized.push_back(normalize_to_ordering(g, ordering));
  std::vector<Interval> out(n);
  for (VertexIndex v = 0; v < n; ++v) out[v].right = Rational(static_cast<std::int64_t>(ordering.index(v)));
  bool first = true;
  for (const Window& w : windows(inst.tau(), inst.delta(), semantics)) {
    for (VertexIndex v = 0; v < n; ++v) {
      Rational left = normalized[w.first - 1][v].left;
      for (int t = w.first + 1; t <= w.last; ++t) left = std::max(left, normalized[t - 1][v].left);
      out[v].left = first ? left : std::min(out[v].left, left);
    }
    first = false;
  }
  if (first) {
    for (VertexIndex v = 0; v < n; ++v) out[v].left = out[v].right;
  }
  return IntervalModel(std::move(out));
}

} // namespace tis
