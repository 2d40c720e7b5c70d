#include <doctest.h>

#include "helpers.hpp"
#include "nrdp/generators.hpp"
#include "nrdp/oracle.hpp"

using namespace nrdp;
using nrdp::test::as_set;
using nrdp::test::rf;
using nrdp::test::vs;

TEST_SUITE("oracle") {

TEST_CASE("tiny graphs") {
  CHECK(oracle_all_minimal(Graph(1, {}), Variant::kRdf) == std::vector{rf("1")});
  CHECK(as_set(oracle_all_minimal(complete_graph(2), Variant::kRdf)) ==
        std::set{rf("11"), rf("20"), rf("02")});
  const Graph p4 = path_graph(4);
  CHECK(oracle_fixed_two(p4, Variant::kCrdf, p4.empty_set()) == std::vector{rf("1111")});
  CHECK(oracle_fixed_two(p4, Variant::kMrdf, vs(4, {0, 3})).empty());
  const ExampleGraph g3 = example_graph_gn(3);
  CHECK(oracle_fixed_two(g3.graph, Variant::kCrdf, g3.a_set).size() == 4);
  CHECK_THROWS_AS(oracle_property_holders(path_graph(11), Variant::kRdf), OracleCapExceeded);
}

TEST_CASE("fixed-two sets partition the minimal functions") {
  Rng rng(101);
  for (int it = 0; it < 30; ++it) {
    const Graph g = random_graph(5, 0.5, rng);
    for (Variant v : {Variant::kRdf, Variant::kMrdf, Variant::kTrdf, Variant::kCrdf, Variant::kPrdf}) {
      std::size_t total = 0;
      for (const auto& a : test::all_subsets(5)) {
        const auto slice = oracle_fixed_two(g, v, a);
        CHECK(slice == oracle_fixed_two_global(g, v, a));
        total += slice.size();
      }
      CHECK(total == oracle_all_minimal(g, v).size());
    }
  }
}

TEST_CASE("the two readings of C[A]") {
  // An rdf whose 2-set is invalid: F(A) is minimal inside the slice, not globally.
  const Graph p4 = path_graph(4);
  CHECK(oracle_fixed_two(p4, Variant::kRdf, vs(4, {0, 1})).empty());
  CHECK(oracle_fixed_two_slice(p4, Variant::kRdf, vs(4, {0, 1})) == std::vector{rf("2201")});
  Rng rng(103);
  for (int it = 0; it < 40; ++it) {
    const Graph g = random_graph(5, 0.5, rng);
    for (Variant v : {Variant::kRdf, Variant::kMrdf, Variant::kTrdf, Variant::kCrdf})
      for (const auto& a : test::all_subsets(5)) {
        const auto slice = as_set(oracle_fixed_two_slice(g, v, a));
        for (const auto& f : oracle_fixed_two(g, v, a)) CHECK(slice.count(f) == 1);
      }
  }
}

TEST_CASE("upward closure") {
  Rng rng(107);
  for (int it = 0; it < 20; ++it) {
    const Graph g = random_graph(5, 0.4, rng);
    for (Variant v : {Variant::kRdf, Variant::kMrdf, Variant::kTrdf, Variant::kCrdf})
      CHECK(oracle_property_is_upward_closed(g, v));
  }
  CHECK_FALSE(oracle_property_is_upward_closed(path_graph(3), Variant::kPrdf));
}

TEST_CASE("extension") {
  const Graph p4 = path_graph(4);
  CHECK_FALSE(oracle_extension(p4, rf("2002"), Variant::kMrdf));
  CHECK(oracle_extension(p4, rf("2002"), Variant::kRdf));
  CHECK(oracle_extension(p4, rf("0000"), Variant::kCrdf));
  CHECK(oracle_extension_dominating_set(p4, vs(4, {0, 3})));
  CHECK_FALSE(oracle_extension_dominating_set(p4, vs(4, {0, 1})));
  CHECK(oracle_extension_dominating_set(p4, p4.empty_set()));
}

TEST_CASE("transversals") {
  Hypergraph h{3, {vs(3, {0, 1})}};
  CHECK(oracle_transversals(h) == std::vector{vs(3, {0}), vs(3, {1})});
  h.edges.push_back(vs(3, {1, 2}));
  CHECK(oracle_transversals(h) == std::vector{vs(3, {0, 2}), vs(3, {1})});
  CHECK(oracle_transversals(Hypergraph{3, {}}) == std::vector{VertexSet(3)});
  CHECK_THROWS_AS(Hypergraph({3, {VertexSet(3)}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph({3, {VertexSet(4, {0})}}).validate(), std::invalid_argument);
}

TEST_CASE("sat") {
  const CnfInstance sat{2, {{1, 2}, {-1}}};
  const auto a = oracle_sat(sat);
  REQUIRE(a);
  CHECK(satisfies(sat, *a));
  CHECK_FALSE((*a)[0]);
  CHECK((*a)[1]);
  CHECK_FALSE(oracle_sat(CnfInstance{1, {{1}, {-1}}}));
  CHECK(oracle_sat(CnfInstance{2, {}}));
}

}  // TEST_SUITE
