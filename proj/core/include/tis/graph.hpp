#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tis {

using VertexIndex = std::size_t;

/// Undirected edge stored with u < v.
struct Edge {
  VertexIndex u = 0;
  VertexIndex v = 0;

  static Edge make(VertexIndex a, VertexIndex b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices [0, n).
///
/// The edge list is kept sorted and duplicate-free; a dense adjacency matrix
/// backs O(1) adjacency queries.
class StaticGraph {
public:
  StaticGraph() = default;
  explicit StaticGraph(std::size_t vertex_count);
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  StaticGraph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(VertexIndex u, VertexIndex v) const noexcept { return adj_[u * n_ + v] != 0; }
  std::vector<VertexIndex> neighbors(VertexIndex v) const;
  std::size_t degree(VertexIndex v) const;

  /// Subgraph induced by `keep` (in the given order); vertex i of the result is keep[i].
  StaticGraph induced(std::span<const VertexIndex> keep) const;

  friend bool operator==(const StaticGraph& a, const StaticGraph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adj_;
};

/// Edge set E1 ∩ E2. Throws std::invalid_argument on vertex-count mismatch.
StaticGraph edge_intersection(const StaticGraph& g1, const StaticGraph& g2);
/// Edge set E1 ∪ E2. Throws std::invalid_argument on vertex-count mismatch.
StaticGraph edge_union(const StaticGraph& g1, const StaticGraph& g2);

} // namespace tis
