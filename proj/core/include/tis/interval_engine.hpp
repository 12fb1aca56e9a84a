#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tis/c1p.hpp"
#include "tis/graph.hpp"
#include "tis/interval_model.hpp"
#include "tis/rational.hpp"

namespace tis {

using Clique = std::vector<VertexIndex>;

struct WeightedSet {
  std::vector<VertexIndex> selected; // increasing
  Rational weight{0};
};

/// Maximum-weight independent set of an interval graph by a sweep over right
/// endpoints. Among equal-weight optima the DP keeps the solution built from
/// intervals with smaller right endpoints (then smaller vertex index).
/// Throws std::invalid_argument on negative or missing weights.
WeightedSet mwis_interval(const IntervalModel& model, std::span<const Rational> weights);

/// Maximal cliques of the model's intersection graph in sweep order; at most n.
std::vector<Clique> maximal_cliques(const IntervalModel& model);

/// Maximal cliques of an arbitrary graph if it is an interval graph, listed in
/// an order in which the cliques containing each vertex are consecutive;
/// std::nullopt if the graph is not an interval graph.
std::optional<std::vector<Clique>> maximal_cliques_abstract(const StaticGraph& graph);

/// Rows are maximal cliques pooled over layers (deduplicated), columns are vertices.
struct CliqueMatrix {
  std::size_t vertex_count = 0;
  std::vector<Clique> rows;
  /// 1-based layer each row was first found in.
  std::vector<int> row_layer;

  BinaryMatrix as_matrix() const;
  std::string format(std::span<const std::string> vertex_names) const;
};

/// Normalized model of `graph` for `ordering`: right(v) = index(v) and
/// left(v) = least index in N[v]. The model is returned only if it re-induces
/// `graph`; otherwise `violation` names a pair whose adjacency differs.
struct Normalization {
  std::optional<IntervalModel> model;
  std::optional<Edge> violation;
};

Normalization try_normalize_to_ordering(const StaticGraph& graph, const VertexOrdering& ordering);
/// Throws OrderingIncompatible carrying a violating pair.
IntervalModel normalize_to_ordering(const StaticGraph& graph, const VertexOrdering& ordering);
IntervalModel normalize_to_ordering(const IntervalModel& model, const VertexOrdering& ordering);

/// Both models share right endpoints vertex by vertex and those endpoints are distinct.
bool share_normalization(const IntervalModel& m1, const IntervalModel& m2);

/// [max(l1, l2), r] per vertex; induces E1 ∩ E2. Throws std::invalid_argument
/// unless the inputs share a normalization.
IntervalModel intersect_models(const IntervalModel& m1, const IntervalModel& m2);
/// [min(l1, l2), r] per vertex; induces E1 ∪ E2.
IntervalModel union_models(const IntervalModel& m1, const IntervalModel& m2);

} // namespace tis
