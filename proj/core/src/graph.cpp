#include "tis/graph.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace tis {

StaticGraph::StaticGraph(std::size_t vertex_count) : n_(vertex_count), adj_(vertex_count * vertex_count, 0) {}

StaticGraph::StaticGraph(std::size_t vertex_count, std::span<const Edge> edges) : StaticGraph(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n_ || e.v >= n_) {
      throw std::invalid_argument("edge endpoint out of range (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") for " + std::to_string(n_) + " vertices");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    edges_.push_back(Edge::make(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adj_[e.u * n_ + e.v] = 1;
    adj_[e.v * n_ + e.u] = 1;
  }
}

std::vector<VertexIndex> StaticGraph::neighbors(VertexIndex v) const {
  std::vector<VertexIndex> out;
  for (VertexIndex u = 0; u < n_; ++u) {
    if (adj_[v * n_ + u]) out.push_back(u);
  }
  return out;
}

std::size_t StaticGraph::degree(VertexIndex v) const {
  auto row = adj_.begin() + static_cast<std::ptrdiff_t>(v * n_);
  return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(n_), std::uint8_t{1}));
}

StaticGraph StaticGraph::induced(std::span<const VertexIndex> keep) const {
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) sub.push_back({i, j});
    }
  }
  return StaticGraph(keep.size(), sub);
}

namespace {

void require_same_size(const StaticGraph& g1, const StaticGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw std::invalid_argument("vertex-count mismatch: " + std::to_string(g1.vertex_count()) + " vs " +
                                std::to_string(g2.vertex_count()));
  }
}

} // namespace

StaticGraph edge_intersection(const StaticGraph& g1, const StaticGraph& g2) {
  require_same_size(g1, g2);
  std::vector<Edge> out;
  std::set_intersection(g1.edges().begin(), g1.edges().end(), g2.edges().begin(), g2.edges().end(),
                        std::back_inserter(out));
  return StaticGraph(g1.vertex_count(), out);
}

StaticGraph edge_union(const StaticGraph& g1, const StaticGraph& g2) {
  require_same_size(g1, g2);
  std::vector<Edge> out;
  std::set_union(g1.edges().begin(), g1.edges().end(), g2.edges().begin(), g2.edges().end(),
                 std::back_inserter(out));
  return StaticGraph(g1.vertex_count(), out);
}

} // namespace tis
