#include "tis/interval_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tis {

IntervalModel::IntervalModel(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t v = 0; v < intervals_.size(); ++v) {
    if (intervals_[v].left > intervals_[v].right) {
      throw std::invalid_argument("interval of vertex " + std::to_string(v) + " has left > right");
    }
  }
}

StaticGraph IntervalModel::graph() const {
  struct Event {
    Rational at;
    bool closes;
    VertexIndex v;
  };
  std::vector<Event> events;
  events.reserve(2 * intervals_.size());
  for (VertexIndex v = 0; v < intervals_.size(); ++v) {
    events.push_back({intervals_[v].left, false, v});
    events.push_back({intervals_[v].right, true, v});
  }
  // Openings sort before closings at equal coordinates so touching intervals meet.
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.at != b.at) return a.at < b.at;
    if (a.closes != b.closes) return !a.closes;
    return a.v < b.v;
  });
  std::vector<VertexIndex> active;
  std::vector<Edge> edges;
  for (const Event& e : events) {
    if (e.closes) {
      active.erase(std::find(active.begin(), active.end(), e.v));
    } else {
      for (VertexIndex u : active) edges.push_back(Edge::make(u, e.v));
      active.push_back(e.v);
    }
  }
  return StaticGraph(intervals_.size(), edges);
}

bool IntervalModel::is_unit() const {
  return std::all_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.length() == intervals_.front().length(); });
}

IntervalModel IntervalModel::restricted(std::span<const VertexIndex> keep) const {
  std::vector<Interval> out;
  out.reserve(keep.size());
  for (VertexIndex v : keep) out.push_back(intervals_.at(v));
  return IntervalModel(std::move(out));
}

VertexOrdering::VertexOrdering(std::vector<VertexIndex> order)
    : order_(std::move(order)), position_(order_.size(), order_.size()) {
  for (std::size_t p = 0; p < order_.size(); ++p) {
    VertexIndex v = order_[p];
    if (v >= order_.size() || position_[v] != order_.size()) {
      throw std::invalid_argument("ordering is not a permutation");
    }
    position_[v] = p;
  }
}

VertexOrdering VertexOrdering::identity(std::size_t n) {
  std::vector<VertexIndex> order(n);
  std::iota(order.begin(), order.end(), VertexIndex{0});
  return VertexOrdering(std::move(order));
}

VertexOrdering VertexOrdering::reversed() const {
  return VertexOrdering(std::vector<VertexIndex>(order_.rbegin(), order_.rend()));
}

bool agrees_with(const IntervalModel& model, const VertexOrdering& ordering) {
  if (model.size() != ordering.size()) return false;
  for (std::size_t p = 1; p < ordering.size(); ++p) {
    if (!(model[ordering.at(p - 1)].right < model[ordering.at(p)].right)) return false;
  }
  return true;
}

} // namespace tis
