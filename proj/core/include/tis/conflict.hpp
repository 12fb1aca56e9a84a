#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tis/graph.hpp"
#include "tis/instance.hpp"

namespace tis {

/// How the sliding windows over the τ layers are laid out.
///
/// Figure (default): windows of Δ consecutive layers starting at 1..τ−Δ+1.
/// Formula: windows of Δ+1 consecutive layers starting at 1..τ−Δ; when that
/// range is empty a single window spans all layers.
enum class WindowSemantics { Figure, Formula };

std::optional<WindowSemantics> parse_window_semantics(std::string_view text);
std::string_view to_string(WindowSemantics semantics);

/// Inclusive 1-based layer range.
struct Window {
  int first = 1;
  int last = 1;

  friend bool operator==(const Window&, const Window&) = default;
};

std::vector<Window> windows(int tau, int delta, WindowSemantics semantics = WindowSemantics::Figure);

/// Union over windows of the intersection of the window's layers.
StaticGraph conflict_graph(const TemporalInstance& inst, WindowSemantics semantics = WindowSemantics::Figure);

/// For the pair (u, v) and window w: a layer inside w that lacks {u, v}.
struct WindowWitness {
  VertexIndex u = 0;
  VertexIndex v = 0;
  Window window;
  int layer = 0;
};

struct IndependenceReport {
  bool independent = true;
  /// One entry per (pair, window) when independent; entries up to the first
  /// violation otherwise.
  std::vector<WindowWitness> certificate;
  /// A pair adjacent in every layer of `violation_window`.
  std::optional<Edge> violation;
  std::optional<Window> violation_window;
};

/// Checks the Δ-independence definition directly, pair by pair and window by window.
IndependenceReport delta_independence_check(const TemporalInstance& inst, std::span<const VertexIndex> selected,
                                            WindowSemantics semantics = WindowSemantics::Figure);

/// 2^Δ · (τ − Δ + 1).
std::size_t neighborhood_bound(int tau, int delta);

/// Size of a maximum independent set of the subgraph induced by N[v].
std::size_t closed_neighborhood_mis(const StaticGraph& graph, VertexIndex v);

/// Whether the maximum independent set inside N[v] of the conflict graph
/// respects 2^Δ(τ−Δ+1). Throws NonUnitInstance for non-unit instances.
bool neighborhood_is_bound_check(const TemporalInstance& inst, VertexIndex v);

} // namespace tis
