#pragma once

#include <string>
#include <vector>

#include "tis/instance.hpp"
#include "tis/instance_io.hpp"

namespace fixtures {

inline std::string data(const std::string& name) { return std::string(TIS_TEST_DATA_DIR) + "/" + name; }

inline tis::TemporalInstance load(const std::string& name) { return tis::read_instance_file(data(name)); }

inline std::vector<tis::VertexIndex> indices(const tis::TemporalInstance& inst, std::vector<std::string> names) {
  return inst.resolve(names);
}

inline std::vector<tis::Edge> named_edges(const tis::TemporalInstance& inst,
                                          const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<tis::Edge> out;
  for (const auto& [a, b] : pairs) out.push_back(tis::Edge::make(inst.index_of(a), inst.index_of(b)));
  return out;
}

} // namespace fixtures
