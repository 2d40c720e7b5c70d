#include <doctest.h>

#include <bit>

#include "helpers.hpp"
#include "nrdp/generators.hpp"
#include "nrdp/oracle.hpp"
#include "nrdp/window.hpp"

using namespace nrdp;
using nrdp::test::as_set;
using nrdp::test::rf;
using nrdp::test::vs;

namespace {

void check_solver_against_oracle(const FixedTwoSolver& solver) {
  const Graph& g = solver.graph();
  for (const auto& a : test::all_subsets(g.order())) {
    const auto got = solver.collect(a);
    CHECK(got.size() == as_set(got).size());
    CHECK(as_set(got) == as_set(oracle_fixed_two(g, solver.variant(), a)));
    if (auto bound = solver.cardinality_bound(g.order())) CHECK(got.size() <= *bound);
    const RomanFunction fa = bijection_f(g, a);
    for (const auto& f : got) {
      CHECK(f.level(2) == a);
      CHECK(leq(fa, f));
    }
  }
}

}  // namespace

TEST_SUITE("variant-plugins") {

TEST_CASE("rdf on general graphs") {
  const Graph p4 = path_graph(4);
  CHECK(c_rdf_general(p4, vs(4, {0, 3})) == std::vector{rf("2002")});
  CHECK(c_rdf_general(p4, vs(4, {0, 1})).empty());
  CHECK(c_rdf_general(p4, p4.empty_set()) == std::vector{rf("1111")});
}

TEST_CASE("mrdf on general graphs") {
  const Graph p4 = path_graph(4);
  CHECK(c_mrdf_general(p4, vs(4, {0, 3})).empty());
  const auto p3 = c_mrdf_general(path_graph(3), vs(3, {1}));
  CHECK(as_set(p3).count(rf("120")) == 1);
  CHECK(c_mrdf_general(complete_graph(2), VertexSet(2)) == std::vector{rf("11")});
}

TEST_CASE("general solvers match the oracle on random graphs") {
  Rng rng(31);
  for (int it = 0; it < 60; ++it) {
    const Graph g = random_graph(3 + it % 5, 0.5, rng);
    check_solver_against_oracle(RdfGeneralSolver(g));
    check_solver_against_oracle(MrdfGeneralSolver(g));
  }
}

TEST_CASE("cobipartite examples") {
  const Graph k4 = complete_graph(4);
  const CobipartitePartition part{vs(4, {0, 1}), vs(4, {2, 3})};
  CHECK(c_crdf_cobipartite(k4, part, vs(4, {0})) == std::vector{rf("2000")});
  CHECK(c_crdf_cobipartite(k4, part, k4.empty_set()) == std::vector{rf("1111")});

  const Graph two_k2(4, {{0, 1}, {2, 3}, {1, 2}});
  const CobipartitePartition p2{vs(4, {0, 1}), vs(4, {2, 3})};
  // 2111 is minimal among functions with V_2 = {0}, but 1111 lies below it.
  CHECK(c_crdf_cobipartite(two_k2, p2, vs(4, {0})).empty());
  CHECK(oracle_fixed_two_slice(two_k2, Variant::kCrdf, vs(4, {0})) == std::vector{rf("2111")});
  CHECK(is_variant(two_k2, rf("1111"), Variant::kCrdf));

  CHECK_THROWS_AS(CobipartiteSolver(path_graph(4), CobipartitePartition{vs(4, {0, 2}), vs(4, {1, 3})}, Variant::kCrdf),
                  std::invalid_argument);
  CHECK_THROWS_AS(CobipartiteSolver(k4, part, Variant::kMrdf), std::invalid_argument);
}

TEST_CASE("cobipartite solvers match the oracle") {
  Rng rng(41);
  for (int it = 0; it < 60; ++it) {
    const auto inst = random_cobipartite(3 + it % 6, 0.35, rng);
    for (Variant v : {Variant::kCrdf, Variant::kTrdf}) {
      const CobipartiteSolver solver(inst.graph, inst.partition, v);
      check_solver_against_oracle(solver);
      if (v != Variant::kCrdf) continue;
      // At most one 1-vertex next to the 2-vertices of each clique.
      for (const auto& a : test::all_subsets(inst.graph.order()))
        for (const auto& f : solver.collect(a))
          for (const auto* c : {&inst.partition.c1, &inst.partition.c2})
            CHECK((f.level(1) & open_neighborhood(inst.graph, f.level(2) & *c)).size() <= 1);
    }
  }
}

TEST_CASE("interval crdf examples") {
  const Graph p4 = path_graph(4);
  const IntervalModel unit({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(c_crdf_interval(p4, unit, p4.empty_set()) == std::vector{rf("1111")});

  const Graph p7 = path_graph(7);
  std::vector<Interval> iv;
  for (std::int64_t i = 0; i < 7; ++i) iv.push_back({i, i + 1});
  const IntervalModel unit7(iv);
  CHECK(as_set(c_crdf_interval(p7, unit7, vs(7, {3}))) == as_set(oracle_fixed_two(p7, Variant::kCrdf, vs(7, {3}))));

  for (std::size_t n = 3; n <= 4; ++n) {
    const ExampleGraph ex = example_graph_gn(n);
    const auto got = c_crdf_interval(ex.graph, ex.model, ex.a_set);
    CHECK(got.size() == (std::size_t{1} << (n - 1)));
    CHECK(as_set(got) == as_set(oracle_fixed_two(ex.graph, Variant::kCrdf, ex.a_set)));
  }
  CHECK_THROWS_AS(IntervalCrdfSolver(p4, IntervalModel({{0, 9}, {1, 2}, {3, 4}, {5, 6}})), std::invalid_argument);
}

TEST_CASE("interval crdf matches the oracle on random models") {
  Rng rng(51);
  for (int it = 0; it < 80; ++it) {
    const auto inst = random_interval_graph(3 + it % 5, 14, 5, rng);
    check_solver_against_oracle(IntervalCrdfSolver(inst.graph, inst.model));
  }
}

TEST_CASE("window tables") {
  const ExampleGraph g2 = example_graph_gn(2);
  const WindowPredicateTables small(g2.graph, g2.model, g2.a_set);
  CHECK(small.universe().size() == 2);

  const Graph p7 = path_graph(7);
  std::vector<Interval> iv;
  for (std::int64_t i = 0; i < 7; ++i) iv.push_back({i, i + 1});
  const IntervalModel unit7(iv);
  const WindowPredicateTables t(p7, unit7, vs(7, {3}));
  CHECK(t.base() == vs(7, {0, 1, 3, 5, 6}));
  CHECK(t.s() == 0);
  CHECK(t.t() == 6);
  const auto& u = t.universe();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      for (std::size_t k = j + 1; k < u.size(); ++k) {
        CHECK(t.start(i, j, k) == t.eval_start(u[i], u[j], u[k]));
        CHECK(t.eval_start(u[i], u[j], u[k]) == t.eval_start(u[j], u[i], u[k]));
        CHECK(t.end(i, j, k) == t.eval_end(u[i], u[j], u[k]));
      }

  const Graph empty_graph(0, {});
  CHECK_THROWS_AS(WindowPredicateTables(empty_graph, IntervalModel(std::vector<Interval>{}), VertexSet(0)), std::invalid_argument);
}

namespace {

// Returns the number of accepted chains; checks both directions on every X with |X| >= 4.
int check_chains(const Graph& g, const IntervalModel& m, const VertexSet& a) {
  const RomanFunction fa = bijection_f(g, a);
  if (fa.positive().empty()) return 0;
  const WindowPredicateTables t(g, m, a);
  const std::size_t u = t.universe().size();
  if (u < 4 || u > 12) return 0;
  int accepted = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << u); ++mask) {
    if (std::popcount(mask) < 4) continue;
    std::vector<std::size_t> pos;
    VertexSet x(g.order());
    for (std::size_t i = 0; i < u; ++i)
      if ((mask >> i) & 1U) {
        pos.push_back(i);
        x.insert(t.universe()[i]);
      }
    const bool direct = is_minimal_variant(g, fa.plus(x), Variant::kCrdf);
    CHECK(t.chain_accepts(pos) == direct);
    accepted += direct;
  }
  return accepted;
}

}  // namespace

TEST_CASE("chains of length at least four agree with direct minimality checks") {
  int accepted = 0;
  for (std::size_t n = 5; n <= 6; ++n) {
    const ExampleGraph ex = example_graph_gn(n);
    accepted += check_chains(ex.graph, ex.model, ex.a_set);
  }
  CHECK(accepted > 0);
  Rng rng(61);
  for (int it = 0; it < 150; ++it) {
    const auto inst = random_interval_graph(7, 12, 4, rng);
    for (const auto& a : test::all_subsets(7)) check_chains(inst.graph, inst.model, a);
  }
}

TEST_CASE("non-emptiness is monotone under subsets") {
  Rng rng(71);
  for (int it = 0; it < 30; ++it) {
    const Graph g = random_graph(6, 0.5, rng);
    const auto cob = random_cobipartite(6, 0.4, rng);
    const auto itv = random_interval_graph(6, 12, 5, rng);
    const std::vector<std::unique_ptr<FixedTwoSolver>> solvers = [&] {
      std::vector<std::unique_ptr<FixedTwoSolver>> s;
      s.push_back(std::make_unique<RdfGeneralSolver>(g));
      s.push_back(std::make_unique<MrdfGeneralSolver>(g));
      s.push_back(std::make_unique<CobipartiteSolver>(cob.graph, cob.partition, Variant::kCrdf));
      s.push_back(std::make_unique<CobipartiteSolver>(cob.graph, cob.partition, Variant::kTrdf));
      s.push_back(std::make_unique<IntervalCrdfSolver>(itv.graph, itv.model));
      return s;
    }();
    const auto subsets = test::all_subsets(6);
    for (const auto& solver : solvers) {
      std::vector<char> nonempty;
      for (const auto& a : subsets) nonempty.push_back(solver->nonempty(a));
      for (std::size_t b = 0; b < subsets.size(); ++b)
        if (nonempty[b])
          for (std::size_t a = 0; a < subsets.size(); ++a)
            if (subsets[a].subset_of(subsets[b])) CHECK(nonempty[a]);
    }
  }
}

TEST_CASE("routing") {
  const Graph p5 = path_graph(5);
  CHECK_THROWS_AS(make_solver(p5, Variant::kCrdf, GraphClass::kGeneral), UnsupportedRoute);
  CHECK_THROWS_AS(make_solver(p5, Variant::kTrdf, GraphClass::kGeneral), UnsupportedRoute);
  CHECK_THROWS_AS(make_solver(p5, Variant::kPrdf, GraphClass::kGeneral), UnsupportedRoute);
  CHECK_THROWS_AS(make_solver(p5, Variant::kCrdf, GraphClass::kInterval), UnsupportedRoute);
  CHECK_THROWS_AS(make_solver(p5, Variant::kCrdf, GraphClass::kCobipartite), UnsupportedRoute);
  CHECK(make_solver(p5, Variant::kMrdf, GraphClass::kGeneral)->variant() == Variant::kMrdf);
  CHECK(resolve_class(complete_graph(4), Variant::kCrdf, nullptr) == GraphClass::kCobipartite);
  CHECK(resolve_class(p5, Variant::kCrdf, nullptr) == GraphClass::kGeneral);
  std::vector<Interval> iv;
  for (std::int64_t i = 0; i < 5; ++i) iv.push_back({i, i + 1});
  const IntervalModel m(iv);
  CHECK(resolve_class(p5, Variant::kCrdf, &m) == GraphClass::kInterval);
}

TEST_CASE("extension check") {
  const Graph p4 = path_graph(4);
  CHECK_FALSE(extension_check(p4, rf("2002"), Variant::kMrdf, ExtensionMode::kOracle));
  CHECK_FALSE(extension_check(p4, rf("2002"), Variant::kMrdf, ExtensionMode::kFast));
  CHECK(extension_check(p4, rf("0000"), Variant::kRdf, ExtensionMode::kFast));
  CHECK_THROWS_AS(extension_check(p4, rf("2100"), Variant::kRdf, ExtensionMode::kFast), std::invalid_argument);
  CHECK_THROWS_AS(extension_check(path_graph(13), RomanFunction(13), Variant::kRdf, ExtensionMode::kOracle),
                  OracleCapExceeded);

  Rng rng(81);
  for (int it = 0; it < 40; ++it) {
    const Graph g = random_graph(5, 0.5, rng);
    for (const auto& f : oracle_property_holders(g, Variant::kRdf)) {
      if (open_neighborhood(g, f.level(1)).intersects(f.level(2))) continue;
      for (Variant v : {Variant::kRdf, Variant::kMrdf})
        CHECK(extension_check(g, f, v, ExtensionMode::kFast) == extension_check(g, f, v, ExtensionMode::kOracle));
    }
  }
}

}  // TEST_SUITE
