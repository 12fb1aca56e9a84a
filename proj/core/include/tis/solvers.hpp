#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tis/conflict.hpp"
#include "tis/graph.hpp"
#include "tis/instance.hpp"
#include "tis/interval_engine.hpp"
#include "tis/interval_model.hpp"
#include "tis/rational.hpp"

namespace tis {

struct Solution {
  std::vector<VertexIndex> selected; // increasing
  Rational weight{0};
  std::string algorithm; // exact, greedy, op or fpt

  std::size_t cardinality() const noexcept { return selected.size(); }
};

/// Exact maximum-weight independent set of a graph with at most 64 vertices
/// by branch and bound. Throws LimitExceeded above 64 vertices.
WeightedSet max_weight_independent_set(const StaticGraph& graph, std::span<const Rational> weights);

/// Optimal on instances whose layers all agree with `ordering`.
/// Throws OrderingIncompatible otherwise.
Solution solve_exact_op(const TemporalInstance& inst, const VertexOrdering& ordering,
                        WindowSemantics semantics = WindowSemantics::Figure);

struct GreedyStep {
  VertexIndex picked = 0;
  std::vector<VertexIndex> removed; // closed neighborhood among remaining vertices
};

/// Repeatedly keeps the heaviest remaining vertex (smallest index on ties)
/// and drops its closed neighborhood in the conflict graph.
Solution solve_greedy(const TemporalInstance& inst, WindowSemantics semantics = WindowSemantics::Figure,
                      std::vector<GreedyStep>* trace = nullptr);

/// Exact given a deletion set S that leaves an order-preserving instance:
/// tries every independent X ⊆ S and completes it optimally on the rest.
/// Throws InvalidInstance if no common ordering is found for inst − S.
Solution solve_fpt(const TemporalInstance& inst, std::span<const VertexIndex> deletion_set,
                   WindowSemantics semantics = WindowSemantics::Figure);

/// Branch and bound on the conflict graph. Throws LimitExceeded if inst.size() > limit.
Solution solve_exact_bruteforce(const TemporalInstance& inst, WindowSemantics semantics = WindowSemantics::Figure,
                                std::size_t limit = 30);

struct VerificationReport {
  IndependenceReport independence;
  bool meets_k = false;
  std::size_t cardinality = 0;
  Rational weight{0};

  bool accepted() const noexcept { return independence.independent && meets_k; }
};

VerificationReport verify_solution(const TemporalInstance& inst, std::span<const VertexIndex> selected,
                                   WindowSemantics semantics = WindowSemantics::Figure);
/// Throws UnknownVertex.
VerificationReport verify_solution(const TemporalInstance& inst, std::span<const std::string> names,
                                   WindowSemantics semantics = WindowSemantics::Figure);

} // namespace tis
