#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nrdp/graph.hpp"
#include "nrdp/interval.hpp"

namespace nrdp {

using Rng = std::mt19937_64;

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// Center 0, leaves 1..k.
Graph star_graph(std::size_t leaves);

// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);
// G(n, p) resampled until connected.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);

struct CobipartiteInstance {
  Graph graph;
  CobipartitePartition partition;
};
// Two cliques of random sizes joined by random cross edges.
CobipartiteInstance random_cobipartite(std::size_t n, double cross_p, Rng& rng);

struct IntervalInstance {
  Graph graph;
  IntervalModel model;
};
// Left endpoints uniform in [0, span], lengths uniform in [0, max_length].
IntervalInstance random_interval_graph(std::size_t n, std::int64_t span, std::int64_t max_length, Rng& rng);

struct SplitInstance {
  Graph graph;
  SplitPartition partition;
};
// Connected split graph without universal vertices; needs n >= 4.
SplitInstance random_connected_split(std::size_t n, Rng& rng);

// The interval family used to show that fixed-two sets can be exponentially large:
// vertices a_1..a_n and twins u_{i,1}, u_{i,2} between a_i and a_{i+1}.
struct ExampleGraph {
  Graph graph;
  IntervalModel model;            // a_i = [10i-3, 10i+3], u_{i,j} = [10i+2, 10i+8]
  VertexSet a_set;                // {a_2, a_4, ...}
  std::vector<std::string> labels;
};

// Layout: a_i -> i-1; u_{i,j} -> n + 2(i-1) + (j-1).
// The twins u_{i,1}, u_{i,2} are adjacent because their intervals coincide.
ExampleGraph example_graph_gn(std::size_t n);
// Same vertex layout, but only the edges a_i-u_{i,j} and a_{i+1}-u_{i,j} (no twin edges).
// Not an interval graph for n >= 2 (the twins close chordless 4-cycles).
Graph example_graph_gn_without_twin_edges(std::size_t n);

}  // namespace nrdp
