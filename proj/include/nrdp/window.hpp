#pragma once

#include <array>
#include <vector>

#include "nrdp/fixed_two.hpp"

namespace nrdp {

// Local predicates that decide, on an interval graph, whether X ⊆ N(A) \ A makes
// F(A) + chi_X a minimal cRdf. Tuples are positions into `universe` and must be
// strictly increasing.
//
//   base = V_1(F(A)) ∪ A,  s / t = vertex of base with least left / greatest right endpoint.
//
//   start(x,y,z):  private condition for {x,y,z}, and s reaches z in base+{x,y,z}
//                  but neither in base+{x,z} nor in base+{y,z}.
//   end(x,y,z):    private condition for {x,y,z}, and t reaches x in base+{x,y,z}
//                  but neither in base+{x,z} nor in base+{x,y}.
//   window(w,x,y,z): private condition for {w,x,y,z}, and w reaches z in base+{w,x,y,z}
//                  but neither in base+{w,x,z} nor in base+{w,y,z}.
//
// The private condition for T: every a in A keeps a private neighbor besides itself in
// G[V \ (V_1(F(A)) ∪ T)]. "Reaches" means same component of the induced subgraph.
class WindowPredicateTables {
 public:
  // Throws std::invalid_argument if the model does not realize g or base is empty.
  WindowPredicateTables(const Graph& g, const IntervalModel& m, const VertexSet& a);

  const std::vector<Vertex>& universe() const { return universe_; }
  Vertex s() const { return s_; }
  Vertex t() const { return t_; }
  const VertexSet& base() const { return base_; }

  bool start(std::size_t i, std::size_t j, std::size_t k) const { return start_[triple(i, j, k)] != 0; }
  bool end(std::size_t i, std::size_t j, std::size_t k) const { return end_[triple(i, j, k)] != 0; }
  bool window(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return window_[quad(i, j, k, l)] != 0;
  }

  // Literal re-evaluation without the memo (for cross-checks).
  bool eval_start(Vertex x, Vertex y, Vertex z) const;
  bool eval_end(Vertex x, Vertex y, Vertex z) const;
  bool eval_window(Vertex w, Vertex x, Vertex y, Vertex z) const;

  // The chain test for |positions| >= 4: start on the first triple, end on the last
  // triple and window on every consecutive quadruple.
  bool chain_accepts(const std::vector<std::size_t>& positions) const;

 private:
  std::size_t triple(std::size_t i, std::size_t j, std::size_t k) const { return (i * u_ + j) * u_ + k; }
  std::size_t quad(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * u_ + j) * u_ + k) * u_ + l;
  }
  bool private_ok(const VertexSet& extra) const;
  bool reaches(Vertex from, Vertex to, const VertexSet& extra) const;
  VertexSet with(std::initializer_list<Vertex> vs) const;

  const Graph* g_;
  VertexSet a_;
  VertexSet ones_;  // V_1(F(A))
  VertexSet base_;
  std::vector<Vertex> universe_;
  std::size_t u_ = 0;
  Vertex s_ = 0;
  Vertex t_ = 0;
  std::vector<char> start_;
  std::vector<char> end_;
  std::vector<char> window_;
};

WindowPredicateTables build_window_tables(const Graph& g, const IntervalModel& m, const VertexSet& a);

// C_CRDF[A] on interval graphs. |X| <= 3 is decided by a direct scan; |X| >= 4 by
// enumerating start-to-end paths in the DAG of consecutive triples.
class IntervalCrdfSolver final : public FixedTwoSolver {
 public:
  // Throws std::invalid_argument if the model does not realize g.
  IntervalCrdfSolver(Graph g, IntervalModel model);
  Variant variant() const override { return Variant::kCrdf; }
  GraphClass class_requirement() const override { return GraphClass::kInterval; }
  const Graph& graph() const override { return g_; }
  const IntervalModel& model() const { return model_; }
  std::optional<std::size_t> cardinality_bound(std::size_t) const override { return std::nullopt; }
  bool enumerate(const VertexSet& a, const FunctionSink& sink) const override;

  // Only the |X| >= 4 regime (path enumeration), for testing the two regimes separately.
  bool enumerate_large(const VertexSet& a, const FunctionSink& sink) const;

 private:
  Graph g_;
  IntervalModel model_;
};

std::vector<RomanFunction> c_crdf_interval(const Graph& g, const IntervalModel& m, const VertexSet& a);

}  // namespace nrdp
