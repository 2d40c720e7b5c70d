#pragma once

#include <set>
#include <vector>

#include "nrdp/graph.hpp"
#include "nrdp/roman.hpp"

namespace nrdp::test {

inline VertexSet vs(std::size_t n, std::initializer_list<Vertex> members) { return VertexSet(n, members); }

inline RomanFunction rf(const char* digits) { return RomanFunction::parse(digits); }

inline std::set<RomanFunction> as_set(const std::vector<RomanFunction>& v) { return {v.begin(), v.end()}; }

// Every subset of {0..n-1}, as vertex sets.
inline std::vector<VertexSet> all_subsets(std::size_t n) {
  std::vector<VertexSet> out;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    VertexSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1U) s.insert(i);
    out.push_back(s);
  }
  return out;
}

// Graph on n vertices whose edges are the set bits of mask over the pairs (i<j) in order.
inline Graph graph_from_mask(std::size_t n, std::size_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U) edges.push_back({i, j});
  return Graph(n, edges);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace nrdp::test
