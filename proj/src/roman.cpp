#include "nrdp/roman.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nrdp {

RomanFunction::RomanFunction(std::vector<std::uint8_t> values) : values_(std::move(values)) {
  for (auto x : values_)
    if (x > 2) throw std::invalid_argument("Roman function value outside {0,1,2}");
}

RomanFunction RomanFunction::characteristic(const VertexSet& s, std::uint8_t level) {
  if (level > 2) throw std::invalid_argument("Roman function value outside {0,1,2}");
  RomanFunction f(s.universe());
  s.for_each([&](Vertex v) { f.values_[v] = level; });
  return f;
}

RomanFunction RomanFunction::parse(std::string_view digits) {
  std::vector<std::uint8_t> values;
  values.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '2') throw std::invalid_argument("Roman function string must use digits 0, 1, 2");
    values.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return RomanFunction(std::move(values));
}

void RomanFunction::set(Vertex v, std::uint8_t value) {
  if (value > 2) throw std::invalid_argument("Roman function value outside {0,1,2}");
  values_.at(v) = value;
}

VertexSet RomanFunction::level(std::uint8_t i) const {
  VertexSet s(size());
  for (Vertex v = 0; v < size(); ++v)
    if (values_[v] == i) s.insert(v);
  return s;
}

VertexSet RomanFunction::positive() const {
  VertexSet s(size());
  for (Vertex v = 0; v < size(); ++v)
    if (values_[v] != 0) s.insert(v);
  return s;
}

std::size_t RomanFunction::weight() const {
  std::size_t w = 0;
  for (auto x : values_) w += x;
  return w;
}

RomanFunction RomanFunction::plus(const VertexSet& s) const {
  if (s.universe() != size()) throw std::invalid_argument("vertex set does not match function length");
  RomanFunction out = *this;
  s.for_each([&](Vertex v) {
    if (out.values_[v] == 2) throw std::domain_error("f + chi leaves {0,1,2}");
    ++out.values_[v];
  });
  return out;
}

RomanFunction RomanFunction::minus(const VertexSet& s) const {
  if (s.universe() != size()) throw std::invalid_argument("vertex set does not match function length");
  RomanFunction out = *this;
  s.for_each([&](Vertex v) {
    if (out.values_[v] == 0) throw std::domain_error("f - chi leaves {0,1,2}");
    --out.values_[v];
  });
  return out;
}

RomanFunction RomanFunction::plus(Vertex v) const { return plus(VertexSet(size(), {v})); }
RomanFunction RomanFunction::minus(Vertex v) const { return minus(VertexSet(size(), {v})); }

std::string RomanFunction::to_string() const {
  std::string s;
  s.reserve(size());
  for (auto x : values_) s += static_cast<char>('0' + x);
  return s;
}

VertexSet levels(const RomanFunction& f, std::uint8_t i) {
  if (i > 2) throw std::invalid_argument("level must be 0, 1 or 2");
  return f.level(i);
}

bool leq(const RomanFunction& f, const RomanFunction& g) {
  if (f.size() != g.size()) throw std::invalid_argument("leq: functions of different length");
  for (Vertex v = 0; v < f.size(); ++v)
    if (f[v] > g[v]) return false;
  return true;
}

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kRdf: return "rdf";
    case Variant::kMrdf: return "mrdf";
    case Variant::kTrdf: return "trdf";
    case Variant::kCrdf: return "crdf";
    case Variant::kPrdf: return "prdf";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (Variant v : {Variant::kRdf, Variant::kMrdf, Variant::kTrdf, Variant::kCrdf, Variant::kPrdf})
    if (lower == variant_name(v)) return v;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

namespace {

void check_size(const Graph& g, const RomanFunction& f) {
  if (f.size() != g.order())
    throw std::invalid_argument("function length " + std::to_string(f.size()) + " does not match graph order " +
                                std::to_string(g.order()));
}

bool zeros_have_two_neighbor(const Graph& g, const VertexSet& v0, const VertexSet& v2) {
  bool ok = true;
  v0.for_each([&](Vertex v) {
    if (!g.neighbors(v).intersects(v2)) ok = false;
  });
  return ok;
}

}  // namespace

bool is_variant(const Graph& g, const RomanFunction& f, Variant variant) {
  check_size(g, f);
  if (g.order() == 0) return true;
  const VertexSet v0 = f.level(0);
  const VertexSet v2 = f.level(2);
  if (variant == Variant::kPrdf) {
    bool ok = true;
    v0.for_each([&](Vertex v) {
      if ((g.neighbors(v) & v2).size() != 1) ok = false;
    });
    return ok;
  }
  if (!zeros_have_two_neighbor(g, v0, v2)) return false;
  switch (variant) {
    case Variant::kRdf: return true;
    case Variant::kMrdf: return !is_dominating(g, v0);
    case Variant::kTrdf: return !has_isolated_vertex(g, f.positive());
    case Variant::kCrdf: return is_connected_set(g, f.positive());
    case Variant::kPrdf: break;
  }
  return false;
}

RomanFunction bijection_f(const Graph& g, const VertexSet& a) {
  RomanFunction f = RomanFunction::characteristic(g.all() - closed_neighborhood(g, a), 1);
  a.for_each([&](Vertex v) { f.set(v, 2); });
  return f;
}

bool private_neighbor_condition(const Graph& g, const VertexSet& twos, const VertexSet& host) {
  bool ok = true;
  twos.for_each([&](Vertex v) {
    if (!ok) return;
    VertexSet others = twos;
    others.erase(v);
    VertexSet covered(g.order());
    others.for_each([&](Vertex u) { covered |= (g.neighbors(u) & host); });
    covered |= others;
    VertexSet priv = (g.neighbors(v) & host) - covered;
    if (priv.empty()) ok = false;
  });
  return ok;
}

bool valid_two_set(const Graph& g, const VertexSet& a) {
  return private_neighbor_condition(g, a, closed_neighborhood(g, a));
}

bool two_vertices_have_private_neighbors(const Graph& g, const RomanFunction& f) {
  check_size(g, f);
  const VertexSet v2 = f.level(2);
  return private_neighbor_condition(g, v2, f.level(0) | v2);
}

MinimalityReport explain_minimality(const Graph& g, const RomanFunction& f, Variant variant) {
  check_size(g, f);
  if (variant == Variant::kPrdf)
    throw std::invalid_argument("no minimality characterization for perfect Roman domination");
  MinimalityReport r;
  r.has_property = is_variant(g, f, variant);
  if (!r.has_property) {
    switch (variant) {
      case Variant::kRdf: r.failures.push_back("not an Rdf: some 0-vertex has no 2-neighbor"); break;
      case Variant::kMrdf:
        r.failures.push_back(is_variant(g, f, Variant::kRdf) ? "not an mRdf: V_0 dominates"
                                                            : "not an mRdf: some 0-vertex has no 2-neighbor");
        break;
      case Variant::kTrdf:
        r.failures.push_back(is_variant(g, f, Variant::kRdf) ? "not a tRdf: V_1 ∪ V_2 has an isolated vertex"
                                                            : "not a tRdf: some 0-vertex has no 2-neighbor");
        break;
      case Variant::kCrdf:
        r.failures.push_back(is_variant(g, f, Variant::kRdf) ? "not a cRdf: V_1 ∪ V_2 is disconnected"
                                                            : "not a cRdf: some 0-vertex has no 2-neighbor");
        break;
      case Variant::kPrdf: break;
    }
    return r;
  }
  if (g.order() == 0) {
    r.minimal = true;
    return r;
  }

  const VertexSet v0 = f.level(0);
  const VertexSet v1 = f.level(1);
  const VertexSet v2 = f.level(2);

  if (variant == Variant::kRdf) {
    if (bijection_f(g, v2) != f) r.failures.push_back("f differs from F(V_2(f)): some 1-vertex has a 2-neighbor");
    if (!valid_two_set(g, v2)) r.failures.push_back("some 2-vertex has no private neighbor besides itself in G[N[V_2]]");
    r.minimal = r.failures.empty();
    return r;
  }

  const VertexSet undominated_by_zeros = g.all() - closed_neighborhood(g, v0);
  const VertexSet pos = v1 | v2;
  v1.for_each([&](Vertex v) {
    if (!g.neighbors(v).intersects(v2)) return;
    bool blocked = false;
    switch (variant) {
      case Variant::kMrdf: blocked = undominated_by_zeros.subset_of(g.closed_neighbors(v)); break;
      case Variant::kTrdf: {
        VertexSet rest = pos;
        rest.erase(v);
        blocked = has_isolated_vertex(g, rest);
        break;
      }
      case Variant::kCrdf: {
        VertexSet rest = pos;
        rest.erase(v);
        blocked = !is_connected_set(g, rest);
        break;
      }
      default: break;
    }
    if (!blocked) r.failures.push_back("1-vertex " + std::to_string(v) + " can be lowered to 0");
  });
  v2.for_each([&](Vertex v) {
    VertexSet others = v2;
    others.erase(v);
    const VertexSet host = v0 | v2;
    VertexSet covered = others;
    others.for_each([&](Vertex u) { covered |= (g.neighbors(u) & host); });
    if (((g.neighbors(v) & host) - covered).empty())
      r.failures.push_back("2-vertex " + std::to_string(v) + " has no private neighbor besides itself in G[V_0 ∪ V_2]");
  });
  r.minimal = r.failures.empty();
  return r;
}

bool is_minimal_variant(const Graph& g, const RomanFunction& f, Variant v) { return explain_minimality(g, f, v).minimal; }

bool nrdp_constraint2_holds(const Graph& g, const RomanFunction& f, Vertex v, Variant variant) {
  check_size(g, f);
  if (!is_variant(g, f, variant)) throw std::invalid_argument("constraint 2: f lacks the property");
  if (f[v] != 0) throw std::invalid_argument("constraint 2: vertex must have value 0");
  return is_variant(g, f.plus(v), variant);
}

bool nrdp_constraint3_holds(const Graph& g, const RomanFunction& f, Vertex v, Variant variant) {
  check_size(g, f);
  if (!is_variant(g, f, variant)) throw std::invalid_argument("constraint 3: f lacks the property");
  if (f[v] != 2) throw std::invalid_argument("constraint 3: vertex must have value 2");
  const VertexSet v2 = f.level(2);
  const VertexSet host = f.level(0) | v2;
  const InducedSubgraph sub = induced_subgraph(g, host);
  VertexSet a(sub.graph.order());
  Vertex local = 0;
  for (Vertex i = 0; i < sub.to_original.size(); ++i) {
    if (v2.contains(sub.to_original[i])) a.insert(i);
    if (sub.to_original[i] == v) local = i;
  }
  VertexSet priv = private_neighbors(sub.graph, a, local);
  priv.erase(local);
  const bool no_private = priv.empty();
  return is_variant(g, f.minus(v), variant) == no_private;
}

}  // namespace nrdp
