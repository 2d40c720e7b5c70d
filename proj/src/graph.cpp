#include "nrdp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nrdp {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) {
  if (n > kMaxVertices) throw std::invalid_argument("graph order exceeds " + std::to_string(kMaxVertices));
  rows_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (rows_[u].contains(v))
      throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    rows_[u].insert(v);
    rows_[v].insert(u);
    ++edge_count_;
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  s.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = open_neighborhood(g, s);
  out |= s;
  return out;
}

VertexSet private_neighbors(const Graph& g, const VertexSet& a, Vertex v) {
  if (!a.contains(v)) throw std::invalid_argument("private_neighbors: vertex " + std::to_string(v) + " not in set");
  VertexSet rest = a;
  rest.erase(v);
  return g.closed_neighbors(v) - closed_neighborhood(g, rest);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_original = s.members();
  std::vector<Vertex> to_new(g.order(), g.order());
  for (Vertex i = 0; i < out.to_original.size(); ++i) to_new[out.to_original[i]] = i;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < out.to_original.size(); ++i) {
    Vertex u = out.to_original[i];
    (g.neighbors(u) & s).for_each([&](Vertex v) {
      if (u < v) edges.emplace_back(i, to_new[v]);
    });
  }
  out.graph = Graph(out.to_original.size(), edges);
  return out;
}

bool is_dominating(const Graph& g, const VertexSet& d) { return closed_neighborhood(g, d) == g.all(); }

VertexSet component_within(const Graph& g, const VertexSet& s, Vertex from) {
  if (!s.contains(from)) throw std::invalid_argument("component_within: start vertex not in set");
  VertexSet seen(g.order());
  seen.insert(from);
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next(g.order());
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    next &= s;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  return component_within(g, s, s.first()) == s;
}

bool is_connected(const Graph& g) { return is_connected_set(g, g.all()); }

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    VertexSet others = s;
    others.erase(v);
    if (!others.subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool has_isolated_vertex(const Graph& g, const VertexSet& s) {
  bool found = false;
  s.for_each([&](Vertex v) {
    if (!g.neighbors(v).intersects(s)) found = true;
  });
  return found;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      bool conflict = false;
      g.neighbors(v).for_each([&](Vertex u) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          conflict = true;
        }
      });
      if (conflict) return std::nullopt;
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

std::optional<CobipartitePartition> recognize_cobipartite(const Graph& g) {
  auto coloring = two_coloring(complement(g));
  if (!coloring) return std::nullopt;
  CobipartitePartition p{VertexSet(g.order()), VertexSet(g.order())};
  for (Vertex v = 0; v < g.order(); ++v) ((*coloring)[v] == 0 ? p.c1 : p.c2).insert(v);
  return p;
}

bool is_valid_cobipartite_partition(const Graph& g, const CobipartitePartition& p) {
  if (p.c1.universe() != g.order() || p.c2.universe() != g.order()) return false;
  if (p.c1.intersects(p.c2) || (p.c1 | p.c2) != g.all()) return false;
  return is_clique(g, p.c1) && is_clique(g, p.c2);
}

std::optional<SplitPartition> recognize_split(const Graph& g) {
  // Hammer-Simeone: sort by degree descending, take the longest clique prefix.
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(order[i]) + 1 >= i + 1) m = i + 1;
  std::size_t lhs = 0, rhs = m * (m - (m > 0 ? 1 : 0));
  for (std::size_t i = 0; i < m; ++i) lhs += g.degree(order[i]);
  for (std::size_t i = m; i < n; ++i) rhs += g.degree(order[i]);
  if (lhs != rhs) return std::nullopt;
  SplitPartition p{VertexSet(n), VertexSet(n)};
  for (std::size_t i = 0; i < n; ++i) (i < m ? p.clique : p.independent).insert(order[i]);
  if (!is_clique(g, p.clique) || !is_independent(g, p.independent)) return std::nullopt;
  return p;
}

bool has_universal_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) return true;
  return false;
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::optional<std::vector<Vertex>> degeneracy_order(const Graph& g, std::size_t k) {
  VertexSet alive = g.all();
  std::vector<Vertex> order;
  while (alive.any()) {
    Vertex best = g.order();
    std::size_t best_deg = g.order() + 1;
    alive.for_each([&](Vertex v) {
      std::size_t d = (g.neighbors(v) & alive).size();
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    });
    if (best_deg > k) return std::nullopt;
    order.push_back(best);
    alive.erase(best);
  }
  return order;
}

}  // namespace nrdp
