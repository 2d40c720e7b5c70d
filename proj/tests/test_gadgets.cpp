#include <doctest.h>

#include "helpers.hpp"
#include "nrdp/fixed_two.hpp"
#include "nrdp/gadgets.hpp"
#include "nrdp/generators.hpp"

using namespace nrdp;
using nrdp::test::vs;

namespace {

// Every variable twice positive and twice negative, three distinct literals per clause.
CnfInstance strict_instance() { return {3, {{1, 2, 3}, {1, 2, 3}, {-1, -2, -3}, {-1, -2, -3}}}; }

}  // namespace

TEST_SUITE("gadgets") {

TEST_CASE("cnf validation") {
  CHECK_NOTHROW(validate_cnf(strict_instance(), SatMode::kStrict));
  CHECK_THROWS_AS(validate_cnf({2, {{1, 2}}}, SatMode::kStrict), std::invalid_argument);
  CHECK_THROWS_AS(validate_cnf({3, {{1, -2, 3}}}, SatMode::kTest), std::invalid_argument);
  CHECK_THROWS_AS(validate_cnf({3, {{1, 1, 2}, {1, 2, 3}, {-1, -2, -3}, {-1, -2, -3}}}, SatMode::kStrict),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_cnf({2, {{1, 4}}}, SatMode::kTest), std::invalid_argument);
  CHECK_THROWS_AS(validate_cnf({2, {{}}}, SatMode::kTest), std::invalid_argument);
  CHECK_THROWS_AS(validate_cnf({0, {}}, SatMode::kTest), std::invalid_argument);
  CHECK_NOTHROW(validate_cnf({2, {{1, 1}, {-2}}}, SatMode::kTest));
}

TEST_CASE("crdf gadget from sat") {
  const GadgetInstance gi = gadget_crdf_from_sat(strict_instance());
  CHECK(gi.kind == "crdf-sat");
  CHECK(gi.graph.order() == 3 * 3 + 4 + 2 * 2);
  CHECK(is_bipartite(gi.graph));
  CHECK(degeneracy_order(gi.graph, 2));
  CHECK(max_degree(gi.graph) <= 4);
  CHECK(gi.metadata.at("two_degenerate") == "yes");
  REQUIRE(gi.fixed_two);
  CHECK(*gi.fixed_two == vs(17, {2, 5, 8, 13, 15}));
  CHECK(gi.vertex("w_2") == 5);
  CHECK(gi.vertex("u'_1") == 14);
  CHECK(gi.vertex("p_4") == 12);
  CHECK_THROWS_AS(gi.vertex("z"), std::out_of_range);
  for (const auto& l : gi.labels) CHECK_FALSE(l.empty());
  CHECK(gi.graph.adjacent(gi.vertex("v_1"), gi.vertex("p_1")));
  CHECK(gi.graph.adjacent(gi.vertex("vbar_3"), gi.vertex("p_4")));
  CHECK(gi.graph.adjacent(gi.vertex("u_2"), gi.vertex("w_3")));
  CHECK_FALSE(gi.graph.adjacent(gi.vertex("v_1"), gi.vertex("p_3")));
  CHECK_THROWS_AS(gadget_crdf_from_sat({2, {{1, 2}}}), std::invalid_argument);
}

TEST_CASE("trdf gadget from sat") {
  const GadgetInstance gi = gadget_trdf_from_sat(strict_instance());
  CHECK(gi.kind == "trdf-sat");
  CHECK(gi.graph.order() == 13);
  CHECK(max_degree(gi.graph) <= 3);
  REQUIRE(gi.fixed_two);
  CHECK(*gi.fixed_two == vs(13, {2, 5, 8}));
}

TEST_CASE("test-mode gadgets follow satisfiability") {
  const CnfInstance sat{2, {{1, 2}, {-1}}};
  const CnfInstance unsat{1, {{1}, {-1}}};
  for (const auto* c : {&sat, &unsat}) {
    const bool expected = oracle_sat(*c).has_value();
    const auto crdf = gadget_crdf_from_sat(*c, SatMode::kTest);
    const auto trdf = gadget_trdf_from_sat(*c, SatMode::kTest);
    CHECK(crdf.metadata.at("mode") == "test");
    CHECK(!oracle_fixed_two(crdf.graph, Variant::kCrdf, *crdf.fixed_two).empty() == expected);
    CHECK(!oracle_fixed_two(trdf.graph, Variant::kTrdf, *trdf.fixed_two).empty() == expected);
  }
  CHECK(gadget_crdf_from_sat({2, {{1, 1}, {-2}}}, SatMode::kTest).metadata.at("duplicate_literals") == "yes");
}

TEST_CASE("maxrd gadget from ext-ds") {
  const Graph p3 = path_graph(3);
  const GadgetInstance gi = gadget_maxrd_from_extds(p3, vs(3, {0}));
  CHECK(gi.graph.order() == 10);
  CHECK(is_bipartite(gi.graph));
  REQUIRE(gi.prefunction);
  CHECK(gi.prefunction->to_string() == "1021200000");
  for (const auto& u : test::all_subsets(3))
    CHECK(oracle_extension(gi.graph, *gadget_maxrd_from_extds(p3, u).prefunction, Variant::kMrdf) ==
          oracle_extension_dominating_set(p3, u));
  CHECK_THROWS_AS(gadget_maxrd_from_extds(p3, VertexSet(4)), std::invalid_argument);
}

TEST_CASE("split gadget from hypergraph") {
  const Hypergraph h{3, {vs(3, {0, 1}), vs(3, {1, 2}), vs(3, {0, 2})}};
  const GadgetInstance gi = gadget_split_from_hypergraph(h);
  CHECK(gi.graph.order() == 8);
  const auto part = recognize_split(gi.graph);
  REQUIRE(part);
  CHECK_FALSE(has_universal_vertex(gi.graph));
  CHECK(*gi.fixed_two == vs(8, {0}));
  std::set<VertexSet> projected;
  for (const auto& f : oracle_fixed_two(gi.graph, Variant::kCrdf, *gi.fixed_two))
    CHECK(projected.insert(split_gadget_projection(gi, f)).second);
  const auto expected = oracle_transversals(h);
  CHECK(projected == std::set<VertexSet>(expected.begin(), expected.end()));

  CHECK_THROWS_AS(gadget_split_from_hypergraph({3, {}}), std::invalid_argument);
  CHECK_THROWS_AS(gadget_split_from_hypergraph({3, {vs(3, {0, 1}), vs(3, {0})}}), std::invalid_argument);
  CHECK_THROWS_AS(split_gadget_projection(gi, RomanFunction(3)), std::invalid_argument);
}

}  // TEST_SUITE
