#include "tis/opvd.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tis/c1p.hpp"
#include "tis/errors.hpp"
#include "tis/order_preservation.hpp"

namespace tis {

namespace {

void require_unit(const TemporalInstance& inst) {
  if (!inst.unit()) throw NonUnitInstance("order-preservation deletion needs unit interval layers");
}

std::optional<std::vector<VertexIndex>> surviving_order(const TemporalInstance& inst,
                                                        const std::vector<VertexIndex>& removed) {
  const auto keep = complement(inst.size(), removed);
  auto ordering = find_common_ordering(inst.restricted(keep));
  if (!ordering) return std::nullopt;
  std::vector<VertexIndex> out;
  for (VertexIndex p : ordering->order()) out.push_back(keep[p]);
  return out;
}

class Search {
public:
  Search(const TemporalInstance& inst, const std::optional<std::vector<VertexIndex>>& candidates)
      : inst_(inst), allowed_(inst.size(), !candidates) {
    if (candidates) {
      for (VertexIndex v : *candidates) allowed_.at(v) = true;
    }
  }

  // Smallest deletion set of exactly `depth` more vertices below `removed`.
  void explore(std::vector<VertexIndex>& removed, std::size_t depth) {
    if (!visited_.insert(removed).second) return;
    const auto keep = complement(inst_.size(), removed);
    const auto report = recognize_order_preserving(inst_.restricted(keep));
    if (report.is_order_preserving) {
      if (!best_ || removed < *best_) best_ = removed;
      return;
    }
    if (depth == 0) return;
    // Every deletion set must hit the witness.
    for (VertexIndex local : report.witness) {
      const VertexIndex v = keep[local];
      if (!allowed_[v]) continue;
      auto next = removed;
      next.insert(std::upper_bound(next.begin(), next.end(), v), v);
      explore(next, depth - 1);
    }
  }

  std::optional<std::vector<VertexIndex>> run(std::size_t depth) {
    visited_.clear();
    best_.reset();
    std::vector<VertexIndex> removed;
    explore(removed, depth);
    // Shallower successes were ruled out by earlier rounds.
    if (best_ && best_->size() != depth) best_.reset();
    return best_;
  }

private:
  const TemporalInstance& inst_;
  std::vector<bool> allowed_;
  std::set<std::vector<VertexIndex>> visited_;
  std::optional<std::vector<VertexIndex>> best_;
};

OpvdResult finish(const TemporalInstance& inst, std::vector<VertexIndex> removed) {
  auto order = surviving_order(inst, removed);
  if (!order) throw std::logic_error("deletion set does not leave an order-preserving instance");
  return {std::move(removed), std::move(*order)};
}

} // namespace

OpvdResult min_opvd(const TemporalInstance& inst, const OpvdOptions& options) {
  require_unit(inst);
  const std::size_t cap = std::min(options.budget.value_or(inst.size()), inst.size());
  Search search(inst, options.candidates);
  for (std::size_t depth = 0; depth <= cap; ++depth) {
    if (auto found = search.run(depth)) return finish(inst, std::move(*found));
  }
  throw BudgetExceeded("no order-preserving deletion set of size at most " + std::to_string(cap));
}

OpvdResult opvd_exhaustive(const TemporalInstance& inst, std::size_t limit,
                           const std::optional<std::vector<VertexIndex>>& candidates) {
  require_unit(inst);
  const std::size_t n = inst.size();
  if (n > limit) {
    throw LimitExceeded("exhaustive deletion search limited to " + std::to_string(limit) + " vertices");
  }
  std::vector<VertexIndex> pool;
  if (candidates) {
    pool = *candidates;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  } else {
    for (VertexIndex v = 0; v < n; ++v) pool.push_back(v);
  }
  const std::size_t m = pool.size();
  for (std::size_t size = 0; size <= m; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<VertexIndex> removed;
      for (std::size_t i : pick) removed.push_back(pool[i]);
      if (auto order = surviving_order(inst, removed)) return {std::move(removed), std::move(*order)};
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("deleting every vertex must leave an order-preserving instance");
}

bool ColumnDeletionReduction::c1p_after_deleting(std::span<const std::size_t> columns) const {
  std::vector<VertexIndex> removed;
  for (std::size_t c : columns) removed.push_back(column_vertex.at(c));
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  const TemporalInstance reduced = remove_vertices(source, removed);
  return consecutive_ones_ordering(pooled_clique_matrix(reduced).as_matrix()).has_value();
}

ColumnDeletionReduction reduce_to_column_deletion(const TemporalInstance& inst) {
  require_unit(inst);
  ColumnDeletionReduction out;
  out.matrix = pooled_clique_matrix(inst);
  out.column_vertex.resize(inst.size());
  for (VertexIndex v = 0; v < inst.size(); ++v) out.column_vertex[v] = v;
  out.source = inst;
  return out;
}

} // namespace tis
