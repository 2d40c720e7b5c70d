#include "nrdp/fixed_two.hpp"

#include <set>

#include "nrdp/oracle.hpp"
#include "nrdp/window.hpp"

namespace nrdp {

std::string_view graph_class_name(GraphClass c) {
  switch (c) {
    case GraphClass::kGeneral: return "general";
    case GraphClass::kCobipartite: return "cobipartite";
    case GraphClass::kInterval: return "interval";
  }
  return "?";
}

bool FixedTwoSolver::nonempty(const VertexSet& a) const {
  bool found = false;
  enumerate(a, [&](const RomanFunction&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<RomanFunction> FixedTwoSolver::collect(const VertexSet& a) const {
  std::vector<RomanFunction> out;
  enumerate(a, [&](const RomanFunction& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

namespace {

void check_universe(const Graph& g, const VertexSet& a) {
  if (a.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph order");
}

}  // namespace

bool RdfGeneralSolver::enumerate(const VertexSet& a, const FunctionSink& sink) const {
  check_universe(g_, a);
  if (!valid_two_set(g_, a)) return true;
  return sink(bijection_f(g_, a));
}

bool MrdfGeneralSolver::enumerate(const VertexSet& a, const FunctionSink& sink) const {
  check_universe(g_, a);
  if (!valid_two_set(g_, a)) return true;
  const RomanFunction f = bijection_f(g_, a);
  if (is_variant(g_, f, Variant::kMrdf)) return sink(f);
  const VertexSet zeros = f.level(0);
  std::set<RomanFunction> seen;
  for (Vertex v = 0; v < g_.order(); ++v) {
    if (a.contains(v)) continue;
    RomanFunction cand = f.plus(zeros & g_.closed_neighbors(v));
    if (!is_minimal_variant(g_, cand, Variant::kMrdf)) continue;
    if (!seen.insert(cand).second) continue;
    if (!sink(cand)) return false;
  }
  return true;
}

CobipartiteSolver::CobipartiteSolver(Graph g, CobipartitePartition partition, Variant variant)
    : g_(std::move(g)), partition_(std::move(partition)), variant_(variant) {
  if (variant_ != Variant::kCrdf && variant_ != Variant::kTrdf)
    throw std::invalid_argument("cobipartite solver handles crdf and trdf only");
  if (!is_valid_cobipartite_partition(g_, partition_)) throw std::invalid_argument("invalid cobipartite partition");
}

bool CobipartiteSolver::enumerate(const VertexSet& a, const FunctionSink& sink) const {
  check_universe(g_, a);
  const RomanFunction fa = bijection_f(g_, a);
  const std::vector<Vertex> zeros = fa.level(0).members();
  const std::size_t n = g_.order();
  auto emit = [&](const RomanFunction& cand) { return !is_minimal_variant(g_, cand, variant_) || sink(cand); };

  if (!emit(fa)) return false;
  for (Vertex v : zeros)
    if (!emit(fa.plus(v))) return false;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = i + 1; j < zeros.size(); ++j)
      if (!emit(fa.plus(VertexSet(n, {zeros[i], zeros[j]})))) return false;
  return true;
}

std::vector<RomanFunction> c_rdf_general(const Graph& g, const VertexSet& a) { return RdfGeneralSolver(g).collect(a); }

std::vector<RomanFunction> c_mrdf_general(const Graph& g, const VertexSet& a) {
  return MrdfGeneralSolver(g).collect(a);
}

std::vector<RomanFunction> c_crdf_cobipartite(const Graph& g, const CobipartitePartition& p, const VertexSet& a) {
  return CobipartiteSolver(g, p, Variant::kCrdf).collect(a);
}

std::vector<RomanFunction> c_trdf_cobipartite(const Graph& g, const CobipartitePartition& p, const VertexSet& a) {
  return CobipartiteSolver(g, p, Variant::kTrdf).collect(a);
}

std::unique_ptr<FixedTwoSolver> make_solver(const Graph& g, Variant variant, GraphClass cls,
                                            const IntervalModel* model) {
  if (variant == Variant::kPrdf)
    throw UnsupportedRoute("prdf: no minimality characterization, predicate only");
  switch (cls) {
    case GraphClass::kGeneral:
      if (variant == Variant::kRdf) return std::make_unique<RdfGeneralSolver>(g);
      if (variant == Variant::kMrdf) return std::make_unique<MrdfGeneralSolver>(g);
      if (variant == Variant::kCrdf)
        throw UnsupportedRoute("crdf on general graphs: deciding whether C[A] is nonempty is NP-complete");
      throw UnsupportedRoute("trdf on general graphs: deciding whether C[A] is nonempty is NP-complete");
    case GraphClass::kCobipartite: {
      if (variant == Variant::kRdf) return std::make_unique<RdfGeneralSolver>(g);
      if (variant == Variant::kMrdf) return std::make_unique<MrdfGeneralSolver>(g);
      auto part = recognize_cobipartite(g);
      if (!part) throw UnsupportedRoute("graph is not cobipartite");
      return std::make_unique<CobipartiteSolver>(g, *part, variant);
    }
    case GraphClass::kInterval:
      if (variant == Variant::kRdf) return std::make_unique<RdfGeneralSolver>(g);
      if (variant == Variant::kMrdf) return std::make_unique<MrdfGeneralSolver>(g);
      if (variant != Variant::kCrdf) throw UnsupportedRoute("trdf on interval graphs: no solver available");
      if (model == nullptr) throw UnsupportedRoute("interval route needs an interval model");
      if (!validate_interval_model(g, *model)) throw UnsupportedRoute("interval model does not realize the graph");
      return std::make_unique<IntervalCrdfSolver>(g, *model);
  }
  throw UnsupportedRoute("unknown graph class");
}

GraphClass resolve_class(const Graph& g, Variant variant, const IntervalModel* model) {
  if (variant == Variant::kRdf || variant == Variant::kMrdf) return GraphClass::kGeneral;
  if (recognize_cobipartite(g)) return GraphClass::kCobipartite;
  if (model != nullptr && variant == Variant::kCrdf) return GraphClass::kInterval;
  return GraphClass::kGeneral;
}

bool extension_check(const Graph& g, const RomanFunction& f, Variant variant, ExtensionMode mode, GraphClass cls,
                     const IntervalModel* model, std::size_t oracle_cap) {
  if (f.size() != g.order()) throw std::invalid_argument("function length does not match graph order");
  if (mode == ExtensionMode::kOracle) return oracle_extension(g, f, variant, oracle_cap);
  const VertexSet v2 = f.level(2);
  if (open_neighborhood(g, f.level(1)).intersects(v2))
    throw std::invalid_argument("fast extension check needs no 1-vertex adjacent to a 2-vertex");
  return make_solver(g, variant, cls, model)->nonempty(v2);
}

}  // namespace nrdp
