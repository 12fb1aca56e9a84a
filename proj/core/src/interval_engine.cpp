#include "tis/interval_engine.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tis/errors.hpp"

namespace tis {

WeightedSet mwis_interval(const IntervalModel& model, std::span<const Rational> weights) {
  const std::size_t n = model.size();
  if (weights.size() != n) throw std::invalid_argument("weight vector size does not match model");
  for (const Rational& w : weights) {
    if (w < Rational(0)) throw std::invalid_argument("negative weight refused");
  }
  std::vector<VertexIndex> by_right(n);
  std::iota(by_right.begin(), by_right.end(), VertexIndex{0});
  std::sort(by_right.begin(), by_right.end(), [&](VertexIndex a, VertexIndex b) {
    if (model[a].right != model[b].right) return model[a].right < model[b].right;
    return a < b;
  });
  std::vector<Rational> rights(n);
  for (std::size_t i = 0; i < n; ++i) rights[i] = model[by_right[i]].right;

  // best[i]: optimum over the first i intervals in right-endpoint order.
  std::vector<Rational> best(n + 1, Rational(0));
  std::vector<std::size_t> compatible(n + 1, 0);
  std::vector<bool> take(n + 1, false);
  for (std::size_t i = 1; i <= n; ++i) {
    const VertexIndex v = by_right[i - 1];
    // Intervals ending strictly before left(v) are disjoint from it.
    compatible[i] = static_cast<std::size_t>(
        std::lower_bound(rights.begin(), rights.end(), model[v].left) - rights.begin());
    Rational with = weights[v] + best[compatible[i]];
    if (with > best[i - 1]) {
      best[i] = with;
      take[i] = true;
    } else {
      best[i] = best[i - 1];
    }
  }
  WeightedSet out;
  out.weight = best[n];
  for (std::size_t i = n; i > 0;) {
    if (take[i]) {
      out.selected.push_back(by_right[i - 1]);
      i = compatible[i];
    } else {
      --i;
    }
  }
  std::sort(out.selected.begin(), out.selected.end());
  return out;
}

std::vector<Clique> maximal_cliques(const IntervalModel& model) {
  struct Event {
    Rational at;
    bool closes;
    VertexIndex v;
  };
  std::vector<Event> events;
  for (VertexIndex v = 0; v < model.size(); ++v) {
    events.push_back({model[v].left, false, v});
    events.push_back({model[v].right, true, v});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.at != b.at) return a.at < b.at;
    if (a.closes != b.closes) return !a.closes;
    return a.v < b.v;
  });
  std::vector<Clique> out;
  std::vector<VertexIndex> active;
  bool grew = false;
  for (const Event& e : events) {
    if (!e.closes) {
      active.push_back(e.v);
      grew = true;
      continue;
    }
    if (grew) {
      Clique c = active;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
      grew = false;
    }
    active.erase(std::find(active.begin(), active.end(), e.v));
  }
  return out;
}

std::optional<std::vector<Clique>> maximal_cliques_abstract(const StaticGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return std::vector<Clique>{};

  // Maximum cardinality search; its reverse is a perfect elimination order iff chordal.
  std::vector<std::size_t> weight(n, 0);
  std::vector<std::size_t> visited_at(n, n);
  for (std::size_t step = 0; step < n; ++step) {
    VertexIndex pick = n;
    for (VertexIndex v = 0; v < n; ++v) {
      if (visited_at[v] == n && (pick == n || weight[v] > weight[pick])) pick = v;
    }
    visited_at[pick] = step;
    for (VertexIndex u : graph.neighbors(pick)) {
      if (visited_at[u] == n) ++weight[u];
    }
  }

  std::vector<Clique> candidates;
  for (VertexIndex v = 0; v < n; ++v) {
    Clique c{v};
    for (VertexIndex u : graph.neighbors(v)) {
      if (visited_at[u] < visited_at[v]) c.push_back(u);
    }
    for (std::size_t i = 1; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!graph.adjacent(c[i], c[j])) return std::nullopt; // not chordal
      }
    }
    std::sort(c.begin(), c.end());
    candidates.push_back(std::move(c));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Clique> cliques;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < candidates.size() && !contained; ++j) {
      contained = i != j && candidates[j].size() > candidates[i].size() &&
                  std::includes(candidates[j].begin(), candidates[j].end(), candidates[i].begin(),
                                candidates[i].end());
    }
    if (!contained) cliques.push_back(candidates[i]);
  }

  // Chordal graphs are interval iff the cliques can be lined up with each
  // vertex's cliques consecutive.
  std::vector<std::vector<std::size_t>> rows(n);
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    for (VertexIndex v : cliques[c]) rows[v].push_back(c);
  }
  auto order = consecutive_ones_ordering(BinaryMatrix(cliques.size(), std::move(rows)));
  if (!order) return std::nullopt;
  std::vector<Clique> arranged;
  arranged.reserve(cliques.size());
  for (std::size_t c : *order) arranged.push_back(cliques[c]);
  return arranged;
}

BinaryMatrix CliqueMatrix::as_matrix() const {
  std::vector<std::vector<std::size_t>> r(rows.begin(), rows.end());
  return BinaryMatrix(vertex_count, std::move(r));
}

std::string CliqueMatrix::format(std::span<const std::string> vertex_names) const {
  return as_matrix().format(vertex_names);
}

namespace {

std::optional<Edge> first_difference(const StaticGraph& a, const StaticGraph& b) {
  std::vector<Edge> diff;
  std::set_symmetric_difference(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                                std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  return diff.front();
}

} // namespace

Normalization try_normalize_to_ordering(const StaticGraph& graph, const VertexOrdering& ordering) {
  const std::size_t n = graph.vertex_count();
  if (ordering.size() != n) throw std::invalid_argument("ordering size does not match graph");
  std::vector<Interval> ivs(n);
  for (VertexIndex v = 0; v < n; ++v) {
    std::size_t lowest = ordering.index(v);
    for (VertexIndex u : graph.neighbors(v)) lowest = std::min(lowest, ordering.index(u));
    ivs[v] = {Rational(static_cast<std::int64_t>(lowest)), Rational(static_cast<std::int64_t>(ordering.index(v)))};
  }
  IntervalModel model(std::move(ivs));
  Normalization out;
  if (auto diff = first_difference(model.graph(), graph)) {
    out.violation = diff;
  } else {
    out.model = std::move(model);
  }
  return out;
}

IntervalModel normalize_to_ordering(const StaticGraph& graph, const VertexOrdering& ordering) {
  auto result = try_normalize_to_ordering(graph, ordering);
  if (!result.model) {
    throw OrderingIncompatible(result.violation->u, result.violation->v,
                               "ordering incompatible: adjacency of vertices " + std::to_string(result.violation->u) +
                                   " and " + std::to_string(result.violation->v) + " cannot be preserved");
  }
  return std::move(*result.model);
}

IntervalModel normalize_to_ordering(const IntervalModel& model, const VertexOrdering& ordering) {
  return normalize_to_ordering(model.graph(), ordering);
}

bool share_normalization(const IntervalModel& m1, const IntervalModel& m2) {
  if (m1.size() != m2.size()) return false;
  std::set<Rational> rights;
  for (VertexIndex v = 0; v < m1.size(); ++v) {
    if (m1[v].right != m2[v].right) return false;
    if (!rights.insert(m1[v].right).second) return false;
  }
  return true;
}

IntervalModel intersect_models(const IntervalModel& m1, const IntervalModel& m2) {
  if (!share_normalization(m1, m2)) throw std::invalid_argument("models are not normalized to one ordering");
  std::vector<Interval> out;
  for (VertexIndex v = 0; v < m1.size(); ++v) out.push_back({std::max(m1[v].left, m2[v].left), m1[v].right});
  return IntervalModel(std::move(out));
}

IntervalModel union_models(const IntervalModel& m1, const IntervalModel& m2) {
  if (!share_normalization(m1, m2)) throw std::invalid_argument("models are not normalized to one ordering");
  std::vector<Interval> out;
  for (VertexIndex v = 0; v < m1.size(); ++v) out.push_back({std::min(m1[v].left, m2[v].left), m1[v].right});
  return IntervalModel(std::move(out));
}

} // namespace tis
