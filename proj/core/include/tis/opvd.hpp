#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tis/instance.hpp"
#include "tis/interval_engine.hpp"

namespace tis {

struct OpvdResult {
  std::vector<VertexIndex> deletion_set; // increasing
  /// Surviving vertices (original indices) in a common ordering.
  std::vector<VertexIndex> ordering;

  std::size_t size() const noexcept { return deletion_set.size(); }
};

struct OpvdOptions {
  /// Largest deletion set to try; BudgetExceeded when no smaller set exists.
  std::optional<std::size_t> budget;
  /// Restrict deletions to these vertices (any order).
  std::optional<std::vector<VertexIndex>> candidates;
};

/// Minimum vertex deletion set to order preservation by iterative deepening
/// over minimal non-order-preserving vertex sets. Among minima the
/// lexicographically smallest set is returned. Throws NonUnitInstance.
OpvdResult min_opvd(const TemporalInstance& inst, const OpvdOptions& options = {});

/// Subsets by increasing size, lexicographic within a size.
/// Throws LimitExceeded if inst.size() > limit, NonUnitInstance for non-unit input.
OpvdResult opvd_exhaustive(const TemporalInstance& inst, std::size_t limit = 16,
                           const std::optional<std::vector<VertexIndex>>& candidates = std::nullopt);

/// Pooled clique matrix with column i standing for vertex column_vertex[i].
struct ColumnDeletionReduction {
  CliqueMatrix matrix;
  std::vector<VertexIndex> column_vertex;
  TemporalInstance source;

  /// Whether deleting the given columns leaves a C1P matrix once the cliques
  /// of each reduced layer are extracted again.
  bool c1p_after_deleting(std::span<const std::size_t> columns) const;
};

ColumnDeletionReduction reduce_to_column_deletion(const TemporalInstance& inst);

} // namespace tis
