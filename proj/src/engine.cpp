#include "nrdp/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nrdp {

namespace {

class Walker {
 public:
  Walker(const Graph& g, Variant variant, const FixedTwoSolver& solver, const FunctionSink& sink,
         const EngineOptions& options)
      : g_(g), variant_(variant), solver_(solver), sink_(sink), options_(options) {}

  EnumerationStats run() {
    VertexSet a(g_.order());
    const bool nonempty = visit(a);
    if (!stopped_ && (nonempty || !options_.prune)) descend(a, 0);
    stats_.max_inter_output_work = std::max(stats_.max_inter_output_work, work_since_output_);
    stats_.stopped_early = stopped_;
    return stats_;
  }

 private:
  // Streams C[a]; returns whether it had any member.
  bool visit(const VertexSet& a) {
    ++stats_.sets_explored;
    ++work_since_output_;
    std::uint64_t produced = 0;
    const bool completed = solver_.enumerate(a, [&](const RomanFunction& f) {
      if (options_.verify) check(a, f);
      ++produced;
      ++stats_.outputs;
      stats_.max_inter_output_work = std::max(stats_.max_inter_output_work, work_since_output_);
      work_since_output_ = 0;
      consecutive_empty_ = 0;
      return sink_(f);
    });
    if (!completed) stopped_ = true;
    if (produced == 0) {
      ++stats_.empty_sets_explored;
      ++consecutive_empty_;
      stats_.max_consecutive_empty = std::max(stats_.max_consecutive_empty, consecutive_empty_);
    }
    return produced > 0;
  }

  void descend(VertexSet& a, Vertex from) {
    for (Vertex v = from; v < g_.order() && !stopped_; ++v) {
      a.insert(v);
      const bool nonempty = visit(a);
      if (!stopped_ && (nonempty || !options_.prune)) descend(a, v + 1);
      a.erase(v);
    }
  }

  void check(const VertexSet& a, const RomanFunction& f) const {
    if (f.level(2) != a || !is_minimal_variant(g_, f, variant_))
      throw std::logic_error("solver emitted " + f.to_string() + " for A = {" + a.to_string() + "}");
  }

  const Graph& g_;
  Variant variant_;
  const FixedTwoSolver& solver_;
  const FunctionSink& sink_;
  EngineOptions options_;
  EnumerationStats stats_;
  std::uint64_t consecutive_empty_ = 0;
  std::uint64_t work_since_output_ = 0;
  bool stopped_ = false;
};

}  // namespace

EnumerationStats enumerate_minimal(const Graph& g, Variant variant, const FixedTwoSolver& solver,
                                   const FunctionSink& sink, const EngineOptions& options) {
  if (solver.variant() != variant)
    throw std::invalid_argument("solver handles " + std::string(variant_name(solver.variant())) + ", not " +
                                std::string(variant_name(variant)));
  if (!(solver.graph() == g)) throw std::invalid_argument("solver was built for a different graph");
  return Walker(g, variant, solver, sink, options).run();
}

BudgetedRun enumerate_with_budget(const Graph& g, Variant variant, const FixedTwoSolver& solver, std::size_t limit,
                                  const EngineOptions& options) {
  BudgetedRun run;
  if (limit == 0) {
    run.stats.stopped_early = true;
    return run;
  }
  run.stats = enumerate_minimal(
      g, variant, solver,
      [&](const RomanFunction& f) {
        run.functions.push_back(f);
        return run.functions.size() < limit;
      },
      options);
  return run;
}

std::vector<RomanFunction> enumerate_all(const Graph& g, Variant variant, const FixedTwoSolver& solver,
                                         EnumerationStats* stats, const EngineOptions& options) {
  std::vector<RomanFunction> out;
  const EnumerationStats s = enumerate_minimal(
      g, variant, solver,
      [&](const RomanFunction& f) {
        out.push_back(f);
        return true;
      },
      options);
  if (stats) *stats = s;
  return out;
}

}  // namespace nrdp
