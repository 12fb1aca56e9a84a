#pragma once

#include <optional>
#include <vector>

#include "tis/conflict.hpp"
#include "tis/instance.hpp"
#include "tis/interval_engine.hpp"
#include "tis/interval_model.hpp"

namespace tis {

struct OrderPreservationReport {
  bool is_order_preserving = false;
  /// Set when is_order_preserving; every layer normalizes to it.
  std::optional<VertexOrdering> ordering;
  /// Set otherwise: an inclusion-minimal vertex set whose induced temporal
  /// graph is not order preserving (its pooled clique matrix has no C1P ordering).
  std::vector<VertexIndex> witness;
};

/// Maximal cliques of every layer pooled and deduplicated, in order of
/// (layer, sweep position). Throws NotIntervalLayer for an edges-mode layer
/// that is not an interval graph.
CliqueMatrix pooled_clique_matrix(const TemporalInstance& inst);

/// An ordering that every layer normalizes to, found through the pooled
/// clique matrix. Works on any instance; for unit instances std::nullopt
/// means no common ordering exists, otherwise it only means none was found.
std::optional<VertexOrdering> find_common_ordering(const TemporalInstance& inst);

/// Throws NonUnitInstance unless inst.unit().
OrderPreservationReport recognize_order_preserving(const TemporalInstance& inst);

/// Interval model of the conflict graph: right(v) = index(v), left(v) = min
/// over windows of the max over window layers of the normalized left endpoint.
/// Throws OrderingIncompatible if some layer does not agree with `ordering`.
IntervalModel conflict_interval_model(const TemporalInstance& inst, const VertexOrdering& ordering,
                                      WindowSemantics semantics = WindowSemantics::Figure);

} // namespace tis
