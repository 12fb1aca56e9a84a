#include "tis/instance.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "tis/errors.hpp"
#include "tis/unit_interval.hpp"

namespace tis {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty() || name.front() == '#') return false;
  return std::none_of(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c) || c == ','; });
}

} // namespace

void TemporalInstance::validate_common() const {
  if (graphs_.empty()) throw InvalidInstance("tau must be at least 1");
  if (delta_ < 1 || delta_ > tau()) {
    throw InvalidInstance("delta " + std::to_string(delta_) + " outside [1, " + std::to_string(tau()) + "]");
  }
  if (k_ < 0) throw InvalidInstance("k must be nonnegative");
  std::unordered_set<std::string> seen;
  for (const Vertex& v : vertices_) {
    if (!valid_name(v.name)) throw InvalidInstance("invalid vertex name '" + v.name + "'");
    if (!seen.insert(v.name).second) throw InvalidInstance("duplicate vertex '" + v.name + "'");
    if (v.weight < Rational(0)) throw InvalidInstance("negative weight on vertex '" + v.name + "'");
  }
}

TemporalInstance TemporalInstance::from_models(std::vector<Vertex> vertices, std::vector<IntervalModel> layers,
                                               Params params) {
  TemporalInstance inst;
  inst.mode_ = LayerMode::Model;
  inst.vertices_ = std::move(vertices);
  inst.delta_ = params.delta;
  inst.k_ = params.k;
  inst.unit_ = params.unit;
  inst.models_ = std::move(layers);
  for (std::size_t t = 0; t < inst.models_.size(); ++t) {
    if (inst.models_[t].size() != inst.vertices_.size()) {
      throw InvalidInstance("layer " + std::to_string(t + 1) + " model covers " +
                            std::to_string(inst.models_[t].size()) + " of " + std::to_string(inst.vertices_.size()) +
                            " vertices");
    }
    if (inst.unit_ && !inst.models_[t].is_unit()) {
      throw InvalidInstance("unit flag violated: layer " + std::to_string(t + 1) + " has intervals of unequal length");
    }
  }
  inst.graphs_.reserve(inst.models_.size());
  for (const IntervalModel& m : inst.models_) inst.graphs_.push_back(m.graph());
  inst.validate_common();
  return inst;
}

TemporalInstance TemporalInstance::from_graphs(std::vector<Vertex> vertices, std::vector<StaticGraph> layers,
                                               Params params) {
  TemporalInstance inst;
  inst.mode_ = LayerMode::Edges;
  inst.vertices_ = std::move(vertices);
  inst.delta_ = params.delta;
  inst.k_ = params.k;
  inst.unit_ = params.unit;
  inst.graphs_ = std::move(layers);
  for (std::size_t t = 0; t < inst.graphs_.size(); ++t) {
    if (inst.graphs_[t].vertex_count() != inst.vertices_.size()) {
      throw InvalidInstance("layer " + std::to_string(t + 1) + " has wrong vertex count");
    }
    if (inst.unit_ && !recognize_unit_interval(inst.graphs_[t]).model) {
      throw InvalidInstance("unit flag violated: layer " + std::to_string(t + 1) + " is not a unit interval graph");
    }
  }
  inst.validate_common();
  return inst;
}

std::vector<Rational> TemporalInstance::weights() const {
  std::vector<Rational> out;
  out.reserve(vertices_.size());
  for (const Vertex& v : vertices_) out.push_back(v.weight);
  return out;
}

std::optional<VertexIndex> TemporalInstance::find(std::string_view name) const {
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].name == name) return v;
  }
  return std::nullopt;
}

VertexIndex TemporalInstance::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw UnknownVertex(std::string(name));
}

std::vector<VertexIndex> TemporalInstance::resolve(std::span<const std::string> names) const {
  std::vector<VertexIndex> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(index_of(n));
  return out;
}

TemporalInstance TemporalInstance::with_params(int delta, int k) const {
  TemporalInstance copy = *this;
  copy.delta_ = delta;
  copy.k_ = k;
  copy.validate_common();
  return copy;
}

TemporalInstance TemporalInstance::restricted(std::span<const VertexIndex> keep) const {
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= size() || (i > 0 && keep[i - 1] >= keep[i])) {
      throw std::invalid_argument("restriction indices must be strictly increasing and in range");
    }
  }
  // Induced subgraphs of (unit) interval graphs stay (unit) interval, so no re-validation.
  TemporalInstance out;
  out.mode_ = mode_;
  out.delta_ = delta_;
  out.k_ = k_;
  out.unit_ = unit_;
  out.vertices_.reserve(keep.size());
  for (VertexIndex v : keep) out.vertices_.push_back(vertices_[v]);
  for (const IntervalModel& m : models_) out.models_.push_back(m.restricted(keep));
  for (const StaticGraph& g : graphs_) out.graphs_.push_back(g.induced(keep));
  return out;
}

const StaticGraph& layer_graph(const TemporalInstance& inst, int t) {
  if (t < 1 || t > inst.tau()) {
    throw std::out_of_range("layer " + std::to_string(t) + " outside [1, " + std::to_string(inst.tau()) + "]");
  }
  return inst.graphs()[static_cast<std::size_t>(t - 1)];
}

std::vector<VertexIndex> complement(std::size_t n, std::span<const VertexIndex> removed) {
  std::vector<bool> gone(n, false);
  for (VertexIndex v : removed) {
    if (v >= n) throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
    gone[v] = true;
  }
  std::vector<VertexIndex> keep;
  for (VertexIndex v = 0; v < n; ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return keep;
}

TemporalInstance remove_vertices(const TemporalInstance& inst, std::span<const VertexIndex> removed) {
  auto keep = complement(inst.size(), removed);
  return inst.restricted(keep);
}

TemporalInstance remove_vertices(const TemporalInstance& inst, std::span<const std::string> removed) {
  auto idx = inst.resolve(removed);
  return remove_vertices(inst, idx);
}

} // namespace tis
