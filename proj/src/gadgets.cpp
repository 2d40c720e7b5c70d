#include "nrdp/gadgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace nrdp {

Vertex GadgetInstance::vertex(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("no vertex labelled " + label);
  return static_cast<Vertex>(it - labels.begin());
}

void validate_cnf(const CnfInstance& c, SatMode mode) {
  if (c.num_vars == 0) throw std::invalid_argument("cnf needs at least one variable");
  std::vector<int> pos(c.num_vars, 0), neg(c.num_vars, 0);
  for (std::size_t j = 0; j < c.clauses.size(); ++j) {
    const auto& clause = c.clauses[j];
    const std::string where = "clause " + std::to_string(j + 1);
    if (clause.empty()) throw std::invalid_argument(where + " is empty");
    if (clause.size() > 3) throw std::invalid_argument(where + " has more than three literals");
    if (mode == SatMode::kStrict && clause.size() != 3) throw std::invalid_argument(where + " must have three literals");
    const bool positive = clause.front() > 0;
    std::set<int> seen;
    for (int lit : clause) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > c.num_vars)
        throw std::invalid_argument(where + " has an out-of-range literal");
      if ((lit > 0) != positive) throw std::invalid_argument(where + " mixes positive and negative literals");
      if (!seen.insert(lit).second && mode == SatMode::kStrict)
        throw std::invalid_argument(where + " repeats a literal");
    }
    for (int lit : seen) (lit > 0 ? pos : neg)[static_cast<std::size_t>(std::abs(lit)) - 1]++;
  }
  if (mode == SatMode::kStrict)
    for (std::size_t i = 0; i < c.num_vars; ++i)
      if (pos[i] != 2 || neg[i] != 2)
        throw std::invalid_argument("variable " + std::to_string(i + 1) + " must occur twice positively and twice negatively");
}

namespace {

bool has_duplicate_literals(const CnfInstance& c) {
  for (const auto& clause : c.clauses)
    if (std::set<int>(clause.begin(), clause.end()).size() != clause.size()) return true;
  return false;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("gadget validation failed: " + what);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

GadgetInstance sat_gadget(const CnfInstance& c, SatMode mode, bool with_chain) {
  validate_cnf(c, mode);
  const std::size_t n = c.num_vars;
  const std::size_t m = c.clauses.size();
  const std::size_t chain = with_chain ? n - 1 : 0;
  const std::size_t order = 3 * n + m + 2 * chain;
  auto v = [](std::size_t i) { return 3 * i; };
  auto vbar = [](std::size_t i) { return 3 * i + 1; };
  auto w = [](std::size_t i) { return 3 * i + 2; };
  auto p = [n](std::size_t j) { return 3 * n + j; };
  auto u = [n, m](std::size_t i) { return 3 * n + m + 2 * i; };
  auto uprime = [n, m](std::size_t i) { return 3 * n + m + 2 * i + 1; };

  GadgetInstance out;
  out.labels.resize(order);
  std::set<Edge> edges;
  auto add = [&](Vertex a, Vertex b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  for (std::size_t i = 0; i < n; ++i) {
    const std::string k = std::to_string(i + 1);
    out.labels[v(i)] = "v_" + k;
    out.labels[vbar(i)] = "vbar_" + k;
    out.labels[w(i)] = "w_" + k;
    add(v(i), w(i));
    add(vbar(i), w(i));
  }
  for (std::size_t j = 0; j < m; ++j) {
    out.labels[p(j)] = "p_" + std::to_string(j + 1);
    for (int lit : c.clauses[j]) {
      const auto i = static_cast<std::size_t>(std::abs(lit)) - 1;
      add(lit > 0 ? v(i) : vbar(i), p(j));
    }
  }
  for (std::size_t i = 0; i < chain; ++i) {
    const std::string k = std::to_string(i + 1);
    out.labels[u(i)] = "u_" + k;
    out.labels[uprime(i)] = "u'_" + k;
    add(u(i), w(i));
    add(u(i), w(i + 1));
    add(u(i), uprime(i));
  }
  out.graph = Graph(order, std::vector<Edge>(edges.begin(), edges.end()));
  VertexSet a(order);
  for (std::size_t i = 0; i < n; ++i) a.insert(w(i));
  for (std::size_t i = 0; i < chain; ++i) a.insert(u(i));
  out.fixed_two = a;
  out.source = c;

  const bool bipartite = is_bipartite(out.graph);
  const std::size_t maxdeg = max_degree(out.graph);
  out.metadata["mode"] = mode == SatMode::kStrict ? "strict" : "test";
  out.metadata["bipartite"] = yes_no(bipartite);
  out.metadata["max_degree"] = std::to_string(maxdeg);
  out.metadata["duplicate_literals"] = yes_no(has_duplicate_literals(c));
  require(bipartite, "not bipartite");
  require(out.graph.order() == order, "vertex count");
  if (with_chain) {
    out.kind = "crdf-sat";
    const auto elim = degeneracy_order(out.graph, 2);
    out.metadata["two_degenerate"] = yes_no(elim.has_value());
    if (elim) {
      std::string s;
      for (Vertex x : *elim) s += (s.empty() ? "" : ",") + std::to_string(x);
      out.metadata["elimination_order"] = s;
    }
    if (mode == SatMode::kStrict) {
      require(elim.has_value(), "not 2-degenerate");
      require(maxdeg <= 4, "maximum degree above 4");
    }
  } else {
    out.kind = "trdf-sat";
    if (mode == SatMode::kStrict) require(maxdeg <= 3, "maximum degree above 3");
  }
  return out;
}

}  // namespace

GadgetInstance gadget_crdf_from_sat(const CnfInstance& c, SatMode mode) { return sat_gadget(c, mode, true); }

GadgetInstance gadget_trdf_from_sat(const CnfInstance& c, SatMode mode) { return sat_gadget(c, mode, false); }

GadgetInstance gadget_maxrd_from_extds(const Graph& g, const VertexSet& u) {
  if (u.universe() != g.order()) throw std::invalid_argument("U does not match the graph order");
  const std::size_t n = g.order();
  const Vertex q = 0, r = 1, s = 2, t = 3;
  auto w = [](Vertex v) { return 4 + 2 * v; };
  auto x = [](Vertex v) { return 5 + 2 * v; };

  GadgetInstance out;
  out.kind = "maxrd-extds";
  out.labels = {"q", "r", "s", "t"};
  std::vector<Edge> edges{{q, r}, {r, s}, {s, t}};
  for (Vertex v = 0; v < n; ++v) {
    out.labels.push_back("w_" + std::to_string(v));
    out.labels.push_back("x_" + std::to_string(v));
    edges.push_back({q, x(v)});
    g.closed_neighbors(v).for_each([&](Vertex nb) { edges.push_back({w(v), x(nb)}); });
  }
  out.graph = Graph(2 * n + 4, edges);
  RomanFunction f(2 * n + 4);
  f.set(s, 2);
  f.set(q, 1);
  f.set(t, 1);
  u.for_each([&](Vertex v) { f.set(w(v), 2); });
  out.prefunction = f;
  out.source = ExtDsInstance{g, u};
  out.metadata["bipartite"] = yes_no(is_bipartite(out.graph));
  require(is_bipartite(out.graph), "not bipartite");
  require(out.graph.order() == 2 * n + 4, "vertex count");
  return out;
}

GadgetInstance gadget_split_from_hypergraph(const Hypergraph& h) {
  h.validate();
  const std::size_t n = h.universe_size;
  const std::size_t m = h.edges.size();
  if (m == 0) throw std::invalid_argument("hypergraph needs at least one edge");
  for (std::size_t i = 0; i < n; ++i)
    if (std::all_of(h.edges.begin(), h.edges.end(), [i](const VertexSet& e) { return e.contains(i); }))
      throw std::invalid_argument("element " + std::to_string(i) + " lies in every edge");

  const std::size_t order = 2 + n + m;
  GadgetInstance out;
  out.kind = "split-hypergraph";
  out.labels = {"a", "b"};
  for (std::size_t i = 0; i < n; ++i) out.labels.push_back("u_" + std::to_string(i));
  for (std::size_t j = 0; j < m; ++j) out.labels.push_back("w_" + std::to_string(j));
  std::vector<Edge> edges;
  VertexSet clique(order), independent(order);
  for (Vertex a = 0; a < 2 + n; ++a) {
    clique.insert(a);
    for (Vertex b = a + 1; b < 2 + n; ++b) edges.push_back({a, b});
  }
  for (std::size_t j = 0; j < m; ++j) {
    independent.insert(2 + n + j);
    h.edges[j].for_each([&](Vertex i) { edges.push_back({2 + i, 2 + n + j}); });
  }
  out.graph = Graph(order, edges);
  out.fixed_two = VertexSet(order, {0});
  out.source = h;
  require(is_clique(out.graph, clique), "clique part");
  require(is_independent(out.graph, independent), "independent part");
  require(!has_universal_vertex(out.graph), "universal vertex");
  out.metadata["split"] = "yes";
  return out;
}

VertexSet split_gadget_projection(const GadgetInstance& gadget, const RomanFunction& g) {
  const auto* h = std::get_if<Hypergraph>(&gadget.source);
  if (h == nullptr) throw std::invalid_argument("not a split gadget");
  if (g.size() != gadget.graph.order()) throw std::invalid_argument("function length does not match gadget");
  VertexSet out(h->universe_size);
  for (std::size_t i = 0; i < h->universe_size; ++i)
    if (g[2 + i] == 1) out.insert(i);
  return out;
}

}  // namespace nrdp
