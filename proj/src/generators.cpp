#include "nrdp/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace nrdp {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  if (p <= 0.0 && n > 1) throw std::invalid_argument("random_connected_graph: p must be positive");
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

CobipartiteInstance random_cobipartite(std::size_t n, double cross_p, Rng& rng) {
  std::uniform_int_distribution<std::size_t> split(0, n);
  const std::size_t k = split(rng);
  std::bernoulli_distribution coin(cross_p);
  std::vector<Edge> edges;
  CobipartitePartition part{VertexSet(n), VertexSet(n)};
  for (Vertex v = 0; v < n; ++v) (v < k ? part.c1 : part.c2).insert(v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool same_side = (u < k) == (v < k);
      if (same_side || coin(rng)) edges.emplace_back(u, v);
    }
  return {Graph(n, edges), std::move(part)};
}

IntervalInstance random_interval_graph(std::size_t n, std::int64_t span, std::int64_t max_length, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> left(0, span);
  std::uniform_int_distribution<std::int64_t> length(0, max_length);
  std::vector<Interval> ivs;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t l = left(rng);
    ivs.push_back({l, l + length(rng)});
  }
  IntervalModel model(std::move(ivs));
  return {model.intersection_graph(), model};
}

SplitInstance random_connected_split(std::size_t n, Rng& rng) {
  if (n < 4) throw std::invalid_argument("random_connected_split: need n >= 4");
  std::uniform_int_distribution<std::size_t> clique_size(2, n - 2);
  while (true) {
    const std::size_t k = clique_size(rng);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<Vertex> pick(0, k - 1);
    for (Vertex w = k; w < n; ++w) {
      bool any = false;
      for (Vertex u = 0; u < k; ++u)
        if (coin(rng)) {
          edges.emplace_back(u, w);
          any = true;
        }
      if (!any) edges.emplace_back(pick(rng), w);
    }
    Graph g(n, edges);
    if (has_universal_vertex(g)) continue;
    SplitPartition part{VertexSet(n), VertexSet(n)};
    for (Vertex v = 0; v < n; ++v) (v < k ? part.clique : part.independent).insert(v);
    return {std::move(g), std::move(part)};
  }
}

namespace {

Vertex gn_a(std::size_t i) { return i - 1; }
Vertex gn_u(std::size_t n, std::size_t i, std::size_t j) { return n + 2 * (i - 1) + (j - 1); }

std::vector<Edge> gn_base_edges(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j <= 2; ++j) {
      edges.emplace_back(gn_a(i), gn_u(n, i, j));
      edges.emplace_back(gn_a(i + 1), gn_u(n, i, j));
    }
  return edges;
}

}  // namespace

ExampleGraph example_graph_gn(std::size_t n) {
  if (n < 2) throw std::invalid_argument("example_graph_gn: n must be at least 2");
  const std::size_t order = n + 2 * (n - 1);
  auto edges = gn_base_edges(n);
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(gn_u(n, i, 1), gn_u(n, i, 2));

  std::vector<Interval> ivs(order);
  std::vector<std::string> labels(order);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto c = static_cast<std::int64_t>(10 * i);
    ivs[gn_a(i)] = {c - 3, c + 3};
    labels[gn_a(i)] = "a_" + std::to_string(i);
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j <= 2; ++j) {
      const auto c = static_cast<std::int64_t>(10 * i);
      ivs[gn_u(n, i, j)] = {c + 2, c + 8};
      labels[gn_u(n, i, j)] = "u_" + std::to_string(i) + "," + std::to_string(j);
    }

  VertexSet a(order);
  for (std::size_t i = 2; i <= n; i += 2) a.insert(gn_a(i));
  return {Graph(order, edges), IntervalModel(std::move(ivs)), std::move(a), std::move(labels)};
}

Graph example_graph_gn_without_twin_edges(std::size_t n) {
  if (n < 2) throw std::invalid_argument("example_graph_gn: n must be at least 2");
  return Graph(n + 2 * (n - 1), gn_base_edges(n));
}

}  // namespace nrdp
