#include "tis/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "tis/errors.hpp"
#include "tis/order_preservation.hpp"

namespace tis {

namespace {

using Mask = std::uint64_t;

class BranchAndBound {
public:
  BranchAndBound(const StaticGraph& graph, std::span<const Rational> weights)
      : weights_(weights.begin(), weights.end()), adj_(graph.vertex_count(), 0) {
    for (const Edge& e : graph.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
  }

  WeightedSet run() {
    const std::size_t n = adj_.size();
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    // Seed with a greedy solution so pruning bites early.
    Mask free = all;
    Mask seed = 0;
    while (free) {
      const int v = std::countr_zero(free);
      seed |= Mask{1} << v;
      free &= ~(adj_[v] | (Mask{1} << v));
    }
    best_ = seed;
    best_weight_ = weight_of(seed);
    branch(all, 0, Rational(0));
    WeightedSet out;
    for (Mask m = best_; m; m &= m - 1) out.selected.push_back(static_cast<VertexIndex>(std::countr_zero(m)));
    out.weight = best_weight_;
    return out;
  }

private:
  Rational weight_of(Mask m) const {
    Rational total(0);
    for (; m; m &= m - 1) total += weights_[std::countr_zero(m)];
    return total;
  }

  void branch(Mask candidates, Mask chosen, Rational chosen_weight) {
    if (candidates == 0) {
      if (chosen_weight > best_weight_) {
        best_ = chosen;
        best_weight_ = chosen_weight;
      }
      return;
    }
    if (chosen_weight + weight_of(candidates) <= best_weight_) return;
    int pivot = -1;
    int pivot_degree = -1;
    for (Mask m = candidates; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int d = std::popcount(adj_[v] & candidates);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot_degree == 0) {
      branch(0, chosen | candidates, chosen_weight + weight_of(candidates));
      return;
    }
    const Mask bit = Mask{1} << pivot;
    branch(candidates & ~adj_[pivot] & ~bit, chosen | bit, chosen_weight + weights_[pivot]);
    branch(candidates & ~bit, chosen, chosen_weight);
  }

  std::vector<Rational> weights_;
  std::vector<Mask> adj_;
  Mask best_ = 0;
  Rational best_weight_{0};
};

Solution to_solution(const TemporalInstance& inst, std::vector<VertexIndex> selected, const char* algorithm) {
  std::sort(selected.begin(), selected.end());
  Solution s;
  for (VertexIndex v : selected) s.weight += inst.vertex(v).weight;
  s.selected = std::move(selected);
  s.algorithm = algorithm;
  return s;
}

} // namespace

WeightedSet max_weight_independent_set(const StaticGraph& graph, std::span<const Rational> weights) {
  if (graph.vertex_count() > 64) throw LimitExceeded("branch and bound handles at most 64 vertices");
  if (weights.size() != graph.vertex_count()) throw std::invalid_argument("weight vector size does not match graph");
  if (graph.vertex_count() == 0) return {};
  return BranchAndBound(graph, weights).run();
}

Solution solve_exact_op(const TemporalInstance& inst, const VertexOrdering& ordering, WindowSemantics semantics) {
  const IntervalModel model = conflict_interval_model(inst, ordering, semantics);
  const auto w = inst.weights();
  return to_solution(inst, mwis_interval(model, w).selected, "op");
}

Solution solve_greedy(const TemporalInstance& inst, WindowSemantics semantics, std::vector<GreedyStep>* trace) {
  const StaticGraph conflict = conflict_graph(inst, semantics);
  const std::size_t n = inst.size();
  std::vector<bool> alive(n, true);
  std::vector<VertexIndex> picked;
  while (true) {
    std::optional<VertexIndex> best;
    for (VertexIndex v = 0; v < n; ++v) {
      if (alive[v] && (!best || inst.vertex(v).weight > inst.vertex(*best).weight)) best = v;
    }
    if (!best) break;
    GreedyStep step{*best, {}};
    for (VertexIndex u = 0; u < n; ++u) {
      if (alive[u] && (u == *best || conflict.adjacent(u, *best))) {
        alive[u] = false;
        step.removed.push_back(u);
      }
    }
    picked.push_back(*best);
    if (trace) trace->push_back(std::move(step));
  }
  return to_solution(inst, std::move(picked), "greedy");
}

Solution solve_fpt(const TemporalInstance& inst, std::span<const VertexIndex> deletion_set, WindowSemantics semantics) {
  const std::size_t n = inst.size();
  std::vector<VertexIndex> s(deletion_set.begin(), deletion_set.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (VertexIndex v : s) {
    if (v >= n) throw UnknownVertex("#" + std::to_string(v));
  }
  if (s.size() >= 63) throw LimitExceeded("deletion set too large for subset enumeration");
  const auto rest = complement(n, s);
  const TemporalInstance op_part = inst.restricted(rest);
  const auto ordering = find_common_ordering(op_part);
  if (!ordering) throw InvalidInstance("the given set does not leave an order-preserving instance");
  const IntervalModel model = conflict_interval_model(op_part, *ordering, semantics);
  const StaticGraph conflict = conflict_graph(inst, semantics);
  const auto rest_weights = op_part.weights();

  std::optional<Solution> best;
  const std::uint64_t subsets = std::uint64_t{1} << s.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<VertexIndex> x;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (mask >> i & 1) x.push_back(s[i]);
    }
    bool independent = true;
    for (std::size_t i = 0; i < x.size() && independent; ++i) {
      for (std::size_t j = i + 1; j < x.size() && independent; ++j) independent = !conflict.adjacent(x[i], x[j]);
    }
    if (!independent) continue;
    // Vertices of the order-preserving part that conflict with X are dropped.
    std::vector<VertexIndex> keep_local;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool hit = false;
      for (VertexIndex u : x) hit = hit || conflict.adjacent(u, rest[i]);
      if (!hit) keep_local.push_back(i);
    }
    std::vector<Rational> w;
    for (std::size_t i : keep_local) w.push_back(rest_weights[i]);
    const WeightedSet part = mwis_interval(model.restricted(keep_local), w);
    std::vector<VertexIndex> chosen = x;
    for (VertexIndex i : part.selected) chosen.push_back(rest[keep_local[i]]);
    Solution candidate = to_solution(inst, std::move(chosen), "fpt");
    if (!best || candidate.weight > best->weight) best = std::move(candidate);
  }
  if (!delta_independence_check(inst, best->selected, semantics).independent) {
    throw std::logic_error("fpt solution is not independent");
  }
  return *best;
}

Solution solve_exact_bruteforce(const TemporalInstance& inst, WindowSemantics semantics, std::size_t limit) {
  if (inst.size() > limit || inst.size() > 64) {
    throw LimitExceeded("brute force limited to " + std::to_string(std::min<std::size_t>(limit, 64)) + " vertices");
  }
  const auto w = inst.weights();
  return to_solution(inst, max_weight_independent_set(conflict_graph(inst, semantics), w).selected, "exact");
}

VerificationReport verify_solution(const TemporalInstance& inst, std::span<const VertexIndex> selected,
                                   WindowSemantics semantics) {
  std::vector<VertexIndex> s(selected.begin(), selected.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  VerificationReport report;
  report.independence = delta_independence_check(inst, s, semantics);
  report.cardinality = s.size();
  for (VertexIndex v : s) report.weight += inst.vertex(v).weight;
  report.meets_k = report.cardinality >= static_cast<std::size_t>(std::max(inst.k(), 0));
  return report;
}

VerificationReport verify_solution(const TemporalInstance& inst, std::span<const std::string> names,
                                   WindowSemantics semantics) {
  const auto indices = inst.resolve(names);
  return verify_solution(inst, indices, semantics);
}

} // namespace tis
