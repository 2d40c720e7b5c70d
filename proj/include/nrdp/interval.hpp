#pragma once

#include <cstdint>
#include <vector>

#include "nrdp/graph.hpp"

namespace nrdp {

// Closed interval [left, right] with integer endpoints.
struct Interval {
  std::int64_t left = 0;
  std::int64_t right = 0;

  bool intersects(const Interval& o) const { return left <= o.right && o.left <= right; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// One interval per vertex. Decimal endpoints are scaled to integers on ingestion.
class IntervalModel {
 public:
  IntervalModel() = default;
  // Throws std::invalid_argument if some interval has left > right.
  explicit IntervalModel(std::vector<Interval> intervals);

  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](Vertex v) const { return intervals_.at(v); }
  const std::vector<Interval>& intervals() const { return intervals_; }

  // Intersection graph of the intervals.
  Graph intersection_graph() const;

  IntervalModel translated(std::int64_t delta) const;
  IntervalModel mirrored() const;

  // Strict order by (left, right, index); ties in the left endpoint are broken
  // deterministically so that every consumer agrees on one linear order.
  bool precedes(Vertex a, Vertex b) const;
  std::vector<Vertex> sorted(const VertexSet& s) const;

 private:
  std::vector<Interval> intervals_;
};

bool validate_interval_model(const Graph& g, const IntervalModel& m);

}  // namespace nrdp
