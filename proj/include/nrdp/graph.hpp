#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nrdp/vertex_set.hpp"

namespace nrdp {

using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kMaxVertices = 65536;

// Immutable simple undirected graph on vertices 0..n-1 with bit-vector adjacency rows.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on self-loops, out-of-range endpoints or duplicate edges.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = rows_.at(v);
    s.insert(v);
    return s;
  }
  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }
  std::size_t degree(Vertex v) const { return rows_.at(v).size(); }

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all() const { return VertexSet::full(order()); }

  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

// N(S) = union of open neighborhoods.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
// N[S] = union of closed neighborhoods; empty for S = {}.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

// N[v] \ N[A \ {v}]. Throws std::invalid_argument if v is not in a.
VertexSet private_neighbors(const Graph& g, const VertexSet& a, Vertex v);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // new index -> original index
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_dominating(const Graph& g, const VertexSet& d);

// G[s] connected. The empty set counts as connected.
bool is_connected_set(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
// Connected component of `from` inside G[s]; `from` must belong to s.
VertexSet component_within(const Graph& g, const VertexSet& s, Vertex from);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
// True when some vertex of G[s] has no neighbor inside s.
bool has_isolated_vertex(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

// Proper 2-coloring (colors 0/1) or nothing if g has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

struct CobipartitePartition {
  VertexSet c1;
  VertexSet c2;
};
std::optional<CobipartitePartition> recognize_cobipartite(const Graph& g);
bool is_valid_cobipartite_partition(const Graph& g, const CobipartitePartition& p);

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};
std::optional<SplitPartition> recognize_split(const Graph& g);

bool has_universal_vertex(const Graph& g);
std::size_t max_degree(const Graph& g);

// Minimum-degree peeling. Returns the elimination order when every removed vertex
// has degree <= k at removal time.
std::optional<std::vector<Vertex>> degeneracy_order(const Graph& g, std::size_t k);

}  // namespace nrdp
