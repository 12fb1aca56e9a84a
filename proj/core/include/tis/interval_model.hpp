#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tis/graph.hpp"
#include "tis/rational.hpp"

namespace tis {

/// Closed interval [left, right] with exact endpoints.
struct Interval {
  Rational left;
  Rational right;

  Rational length() const { return right - left; }
  /// Closed intersection: touching endpoints intersect.
  bool intersects(const Interval& other) const noexcept { return left <= other.right && other.left <= right; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// One closed interval per vertex; vertex i is intervals()[i].
class IntervalModel {
public:
  IntervalModel() = default;
  /// Throws std::invalid_argument if some interval has left > right.
  explicit IntervalModel(std::vector<Interval> intervals);

  std::size_t size() const noexcept { return intervals_.size(); }
  const Interval& operator[](VertexIndex v) const { return intervals_[v]; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

  /// Intersection graph, computed by an endpoint sweep.
  StaticGraph graph() const;

  /// True when every interval has the same length (vacuously true for n <= 1).
  bool is_unit() const;

  IntervalModel restricted(std::span<const VertexIndex> keep) const;

  friend bool operator==(const IntervalModel&, const IntervalModel&) = default;

private:
  std::vector<Interval> intervals_;
};

/// Total order on [0, n): order()[p] is the vertex at position p.
class VertexOrdering {
public:
  VertexOrdering() = default;
  /// Throws std::invalid_argument unless `order` is a permutation of [0, n).
  explicit VertexOrdering(std::vector<VertexIndex> order);

  static VertexOrdering identity(std::size_t n);

  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<VertexIndex>& order() const noexcept { return order_; }
  VertexIndex at(std::size_t position) const { return order_[position]; }
  /// 0-based position of v.
  std::size_t position(VertexIndex v) const { return position_[v]; }
  /// 1-based ordinal of v, the normalized right endpoint.
  std::size_t index(VertexIndex v) const { return position_[v] + 1; }

  VertexOrdering reversed() const;

  friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) noexcept { return a.order_ == b.order_; }

private:
  std::vector<VertexIndex> order_;
  std::vector<std::size_t> position_;
};

/// Right endpoints strictly increase along `ordering`.
bool agrees_with(const IntervalModel& model, const VertexOrdering& ordering);

} // namespace tis
