#include "nrdp/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace nrdp {

IntervalModel::IntervalModel(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t v = 0; v < intervals_.size(); ++v)
    if (intervals_[v].left > intervals_[v].right)
      throw std::invalid_argument("interval of vertex " + std::to_string(v) + " has left > right");
}

Graph IntervalModel::intersection_graph() const {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v = u + 1; v < size(); ++v)
      if (intervals_[u].intersects(intervals_[v])) edges.emplace_back(u, v);
  return Graph(size(), edges);
}

IntervalModel IntervalModel::translated(std::int64_t delta) const {
  auto out = intervals_;
  for (auto& iv : out) {
    iv.left += delta;
    iv.right += delta;
  }
  return IntervalModel(std::move(out));
}

IntervalModel IntervalModel::mirrored() const {
  auto out = intervals_;
  for (auto& iv : out) iv = Interval{-iv.right, -iv.left};
  return IntervalModel(std::move(out));
}

bool IntervalModel::precedes(Vertex a, Vertex b) const {
  const auto& x = intervals_.at(a);
  const auto& y = intervals_.at(b);
  return std::tie(x.left, x.right, a) < std::tie(y.left, y.right, b);
}

std::vector<Vertex> IntervalModel::sorted(const VertexSet& s) const {
  auto out = s.members();
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return precedes(a, b); });
  return out;
}

bool validate_interval_model(const Graph& g, const IntervalModel& m) {
  if (m.size() != g.order()) return false;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (m[u].intersects(m[v]) != g.adjacent(u, v)) return false;
  return true;
}

}  // namespace nrdp
