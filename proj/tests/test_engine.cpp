#include <doctest.h>

#include "helpers.hpp"
#include "nrdp/engine.hpp"
#include "nrdp/generators.hpp"
#include "nrdp/oracle.hpp"
#include "nrdp/window.hpp"

using namespace nrdp;
using nrdp::test::as_set;
using nrdp::test::rf;

TEST_SUITE("enum-engine") {

TEST_CASE("small graphs match the oracle") {
  const Graph p4 = path_graph(4);
  const RdfGeneralSolver rdf(p4);
  EnumerationStats stats;
  const auto got = enumerate_all(p4, Variant::kRdf, rdf, &stats);
  CHECK(got.size() == 7);
  CHECK(as_set(got) == as_set(oracle_all_minimal(p4, Variant::kRdf)));
  CHECK(stats.outputs == 7);
  CHECK_FALSE(stats.stopped_early);

  const Graph k3 = complete_graph(3);
  const MrdfGeneralSolver mrdf(k3);
  CHECK(as_set(enumerate_all(k3, Variant::kMrdf, mrdf)) == as_set(oracle_all_minimal(k3, Variant::kMrdf)));

  const Graph k1(1, {});
  CHECK(enumerate_all(k1, Variant::kRdf, RdfGeneralSolver(k1)) == std::vector{rf("1")});
  const Graph k0(0, {});
  CHECK(enumerate_all(k0, Variant::kRdf, RdfGeneralSolver(k0)) == std::vector{RomanFunction(0)});
}

TEST_CASE("budgets") {
  const ExampleGraph ex = example_graph_gn(4);
  const IntervalCrdfSolver solver(ex.graph, ex.model);
  const auto full = enumerate_all(ex.graph, Variant::kCrdf, solver);
  for (std::size_t limit : {0, 1, 3}) {
    const auto run = enumerate_with_budget(ex.graph, Variant::kCrdf, solver, limit);
    CHECK(run.functions.size() == limit);
    CHECK(run.stats.stopped_early);
    CHECK(std::equal(run.functions.begin(), run.functions.end(), full.begin()));
  }
  const auto all = enumerate_with_budget(ex.graph, Variant::kCrdf, solver, full.size() + 5);
  CHECK(all.functions == full);
  CHECK_FALSE(all.stats.stopped_early);
}

TEST_CASE("pruning does not change the output") {
  Rng rng(91);
  EngineOptions no_prune;
  no_prune.prune = false;
  for (int it = 0; it < 40; ++it) {
    const auto inst = random_cobipartite(3 + it % 5, 0.3, rng);
    const std::size_t n = inst.graph.order();
    for (Variant v : {Variant::kCrdf, Variant::kTrdf}) {
      const CobipartiteSolver solver(inst.graph, inst.partition, v);
      EnumerationStats pruned, plain;
      const auto a = enumerate_all(inst.graph, v, solver, &pruned);
      const auto b = enumerate_all(inst.graph, v, solver, &plain, no_prune);
      CHECK(a == b);
      CHECK(as_set(a).size() == a.size());
      CHECK(plain.sets_explored == (std::uint64_t{1} << n));
      CHECK(pruned.max_consecutive_empty <= n * n);
      CHECK(pruned.outputs <= pruned.sets_explored * (n * n + n + 1));
    }
  }
}

TEST_CASE("solver mismatch is rejected") {
  const Graph p4 = path_graph(4);
  const RdfGeneralSolver rdf(p4);
  CHECK_THROWS_AS(enumerate_all(p4, Variant::kMrdf, rdf), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_all(path_graph(5), Variant::kRdf, rdf), std::invalid_argument);
}

TEST_CASE("verify mode accepts correct solvers") {
  EngineOptions verify;
  verify.verify = true;
  Rng rng(93);
  for (int it = 0; it < 20; ++it) {
    const auto inst = random_interval_graph(6, 12, 4, rng);
    const IntervalCrdfSolver solver(inst.graph, inst.model);
    CHECK(as_set(enumerate_all(inst.graph, Variant::kCrdf, solver, nullptr, verify)) ==
          as_set(oracle_all_minimal(inst.graph, Variant::kCrdf)));
  }
}

}  // TEST_SUITE
