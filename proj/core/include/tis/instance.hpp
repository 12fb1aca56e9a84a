#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tis/graph.hpp"
#include "tis/interval_model.hpp"
#include "tis/rational.hpp"

namespace tis {

enum class LayerMode { Model, Edges };

struct Vertex {
  std::string name;
  Rational weight{1};

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A Temporal Δ Independent Set instance: vertices, τ layers, Δ and the target k.
///
/// Layers are either interval models (Model mode) or plain graphs (Edges mode).
/// Layer graphs are materialized at construction in both modes. Construction
/// validates every invariant and throws InvalidInstance on violation.
class TemporalInstance {
public:
  struct Params {
    int delta = 1;
    int k = 0;
    bool unit = true;
  };

  TemporalInstance() = default;

  static TemporalInstance from_models(std::vector<Vertex> vertices, std::vector<IntervalModel> layers, Params params);
  static TemporalInstance from_graphs(std::vector<Vertex> vertices, std::vector<StaticGraph> layers, Params params);

  LayerMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int tau() const noexcept { return static_cast<int>(graphs_.size()); }
  int delta() const noexcept { return delta_; }
  int k() const noexcept { return k_; }
  bool unit() const noexcept { return unit_; }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
  const std::string& name(VertexIndex v) const { return vertices_.at(v).name; }
  std::vector<Rational> weights() const;

  std::optional<VertexIndex> find(std::string_view name) const;
  /// Throws UnknownVertex.
  VertexIndex index_of(std::string_view name) const;
  std::vector<VertexIndex> resolve(std::span<const std::string> names) const;

  /// 0-based layer access. models() is empty in Edges mode.
  const std::vector<IntervalModel>& models() const noexcept { return models_; }
  const std::vector<StaticGraph>& graphs() const noexcept { return graphs_; }

  TemporalInstance with_params(int delta, int k) const;

  /// Induced sub-instance on `keep` (strictly increasing indices).
  TemporalInstance restricted(std::span<const VertexIndex> keep) const;

  friend bool operator==(const TemporalInstance& a, const TemporalInstance& b) {
    return a.mode_ == b.mode_ && a.vertices_ == b.vertices_ && a.delta_ == b.delta_ && a.k_ == b.k_ &&
           a.unit_ == b.unit_ && a.models_ == b.models_ && a.graphs_ == b.graphs_;
  }

private:
  void validate_common() const;

  LayerMode mode_ = LayerMode::Model;
  std::vector<Vertex> vertices_;
  int delta_ = 1;
  int k_ = 0;
  bool unit_ = true;
  std::vector<IntervalModel> models_;
  std::vector<StaticGraph> graphs_;
};

/// Graph of layer t, 1 <= t <= τ. Throws std::out_of_range otherwise.
const StaticGraph& layer_graph(const TemporalInstance& inst, int t);

/// 𝒢 − S: vertices, weights and layers restricted to V∖S; τ, Δ, k unchanged.
TemporalInstance remove_vertices(const TemporalInstance& inst, std::span<const VertexIndex> removed);
/// Throws UnknownVertex for names not in the instance.
TemporalInstance remove_vertices(const TemporalInstance& inst, std::span<const std::string> removed);

/// Indices of V∖S in increasing order.
std::vector<VertexIndex> complement(std::size_t n, std::span<const VertexIndex> removed);

} // namespace tis
