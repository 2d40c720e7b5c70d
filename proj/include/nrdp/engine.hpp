#pragma once

#include <cstdint>
#include <vector>

#include "nrdp/fixed_two.hpp"

namespace nrdp {

struct EnumerationStats {
  std::uint64_t outputs = 0;
  std::uint64_t sets_explored = 0;        // sets A whose C[A] was computed
  std::uint64_t empty_sets_explored = 0;  // ... and turned out empty
  std::uint64_t max_consecutive_empty = 0;
  std::uint64_t max_inter_output_work = 0;  // sets explored between two outputs (or before the first / after the last)
  bool stopped_early = false;
};

struct EngineOptions {
  bool prune = true;  // false: visit all 2^n sets (debug mode)
#ifdef NDEBUG
  bool verify = false;
#else
  bool verify = true;  // re-check every output against the characterization
#endif
};

// Depth-first over candidate 2-sets A, extending only by vertices above max(A). C[A] is
// streamed when A is first visited; a child A+v with empty C is not descended into.
// Throws std::invalid_argument when the solver does not match (g, variant).
EnumerationStats enumerate_minimal(const Graph& g, Variant variant, const FixedTwoSolver& solver,
                                   const FunctionSink& sink, const EngineOptions& options = {});

struct BudgetedRun {
  std::vector<RomanFunction> functions;
  EnumerationStats stats;
};

BudgetedRun enumerate_with_budget(const Graph& g, Variant variant, const FixedTwoSolver& solver, std::size_t limit,
                                  const EngineOptions& options = {});

// Convenience: every emitted function, in engine order.
std::vector<RomanFunction> enumerate_all(const Graph& g, Variant variant, const FixedTwoSolver& solver,
                                         EnumerationStats* stats = nullptr, const EngineOptions& options = {});

}  // namespace nrdp
