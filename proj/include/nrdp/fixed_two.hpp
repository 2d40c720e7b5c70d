#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "nrdp/graph.hpp"
#include "nrdp/interval.hpp"
#include "nrdp/roman.hpp"

namespace nrdp {

// Receives one function at a time; returning false stops the stream.
using FunctionSink = std::function<bool(const RomanFunction&)>;

enum class GraphClass { kGeneral, kCobipartite, kInterval };
std::string_view graph_class_name(GraphClass c);

// Raised when no solver exists for a (variant, graph class) pair.
class UnsupportedRoute : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumerates C[A]: the minimal functions with the solver's property whose 2-set is exactly A.
class FixedTwoSolver {
 public:
  virtual ~FixedTwoSolver() = default;

  virtual Variant variant() const = 0;
  virtual GraphClass class_requirement() const = 0;
  virtual const Graph& graph() const = 0;
  // Upper bound on |C[A]| for a graph of order n, when one is known.
  virtual std::optional<std::size_t> cardinality_bound(std::size_t n) const = 0;

  // Streams C[a] in a deterministic order. Returns false when the sink stopped early.
  virtual bool enumerate(const VertexSet& a, const FunctionSink& sink) const = 0;

  bool nonempty(const VertexSet& a) const;
  std::vector<RomanFunction> collect(const VertexSet& a) const;
};

// C_RDF[A] on any graph: {F(A)} when A is a valid two-set, else empty.
class RdfGeneralSolver final : public FixedTwoSolver {
 public:
  explicit RdfGeneralSolver(Graph g) : g_(std::move(g)) {}
  Variant variant() const override { return Variant::kRdf; }
  GraphClass class_requirement() const override { return GraphClass::kGeneral; }
  const Graph& graph() const override { return g_; }
  std::optional<std::size_t> cardinality_bound(std::size_t) const override { return 1; }
  bool enumerate(const VertexSet& a, const FunctionSink& sink) const override;

 private:
  Graph g_;
};

// C_MRDF[A] on any graph; at most n members.
class MrdfGeneralSolver final : public FixedTwoSolver {
 public:
  explicit MrdfGeneralSolver(Graph g) : g_(std::move(g)) {}
  Variant variant() const override { return Variant::kMrdf; }
  GraphClass class_requirement() const override { return GraphClass::kGeneral; }
  const Graph& graph() const override { return g_; }
  std::optional<std::size_t> cardinality_bound(std::size_t n) const override { return n; }
  bool enumerate(const VertexSet& a, const FunctionSink& sink) const override;

 private:
  Graph g_;
};

// C_CRDF[A] or C_TRDF[A] on cobipartite graphs. Members add at most two 1-values to F(A),
// so filtering the n^2 + n + 1 candidates is complete.
class CobipartiteSolver final : public FixedTwoSolver {
 public:
  // Throws std::invalid_argument for an invalid partition or a variant other than CRDF/TRDF.
  CobipartiteSolver(Graph g, CobipartitePartition partition, Variant variant);
  Variant variant() const override { return variant_; }
  GraphClass class_requirement() const override { return GraphClass::kCobipartite; }
  const Graph& graph() const override { return g_; }
  const CobipartitePartition& partition() const { return partition_; }
  std::optional<std::size_t> cardinality_bound(std::size_t n) const override { return n * n + n + 1; }
  bool enumerate(const VertexSet& a, const FunctionSink& sink) const override;

 private:
  Graph g_;
  CobipartitePartition partition_;
  Variant variant_;
};

// Free-function forms of the solvers above, collecting the whole stream.
std::vector<RomanFunction> c_rdf_general(const Graph& g, const VertexSet& a);
std::vector<RomanFunction> c_mrdf_general(const Graph& g, const VertexSet& a);
std::vector<RomanFunction> c_crdf_cobipartite(const Graph& g, const CobipartitePartition& p, const VertexSet& a);
std::vector<RomanFunction> c_trdf_cobipartite(const Graph& g, const CobipartitePartition& p, const VertexSet& a);

// Picks a solver for (variant, class). kGeneral with CRDF/TRDF/PRDF and kInterval with
// anything but CRDF raise UnsupportedRoute. kInterval needs a model.
std::unique_ptr<FixedTwoSolver> make_solver(const Graph& g, Variant variant, GraphClass cls,
                                            const IntervalModel* model = nullptr);

// Resolves the "auto" class hint: interval when a model is given, cobipartite when
// recognized, general otherwise.
GraphClass resolve_class(const Graph& g, Variant variant, const IntervalModel* model);

enum class ExtensionMode { kFast, kOracle };

// Is there a minimal function with the property that is >= f pointwise?
// Fast mode needs N(V_1(f)) ∩ V_2(f) = {} and a solver for (variant, class); it asks
// whether C[V_2(f)] is nonempty. Oracle mode brute-forces and rejects graphs above oracle_cap.
bool extension_check(const Graph& g, const RomanFunction& f, Variant variant, ExtensionMode mode,
                     GraphClass cls = GraphClass::kGeneral, const IntervalModel* model = nullptr,
                     std::size_t oracle_cap = 12);

}  // namespace nrdp
