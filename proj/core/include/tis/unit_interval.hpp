#pragma once

#include <optional>
#include <vector>

#include "tis/graph.hpp"
#include "tis/interval_model.hpp"

namespace tis {

/// Either a unit-length model realizing the graph, or the columns of an
/// inclusion-minimal non-C1P submatrix of the closed-neighborhood matrix.
struct UnitRecognition {
  std::optional<IntervalModel> model;
  std::vector<VertexIndex> witness;
};

/// Unit interval recognition through the consecutive-ones property of the
/// closed-neighborhood matrix. Left endpoints lie on a grid of step 1/(n+1).
UnitRecognition recognize_unit_interval(const StaticGraph& graph);

} // namespace tis
