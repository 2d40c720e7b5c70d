#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "nrdp/generators.hpp"
#include "nrdp/io.hpp"

using namespace nrdp;
using nrdp::test::vs;

TEST_SUITE("io") {

TEST_CASE("graph files") {
  std::istringstream in("# path\n4 3\n0 1\n\n1 2\n# tail\n2 3\n");
  const Graph g = read_graph(in);
  CHECK(g == path_graph(4));
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream back(out.str());
  CHECK(read_graph(back) == g);

  for (const char* bad : {"3 1\n0 1\n1 0\n", "3 2\n0 1\n", "3 1\n0 5\n", "x\n", "", "2 1\n0 0\n", "2 1\n0 1 1\n"}) {
    std::istringstream s(bad);
    CHECK_THROWS_AS(read_graph(s), IoError);
  }
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph"), IoError);
}

TEST_CASE("interval files") {
  std::istringstream in("3\n0 2\n1 3\n# c\n4 5\n");
  const IntervalModel m = read_intervals(in);
  CHECK(m.size() == 3);
  std::ostringstream out;
  write_intervals(out, m);
  CHECK(out.str() == "3\n0 2\n1 3\n4 5\n");
  std::istringstream bad("2\n3 1\n0 1\n");
  CHECK_THROWS_AS(read_intervals(bad), IoError);
}

TEST_CASE("hypergraph files") {
  std::istringstream in("3 2\n0 1\n1 2\n");
  const Hypergraph h = read_hypergraph(in);
  CHECK(h.edges == std::vector{vs(3, {0, 1}), vs(3, {1, 2})});
  std::ostringstream out;
  write_hypergraph(out, h);
  std::istringstream back(out.str());
  CHECK(read_hypergraph(back).edges == h.edges);
  std::istringstream bad("3 1\n0 7\n");
  CHECK_THROWS_AS(read_hypergraph(bad), IoError);
}

TEST_CASE("dimacs") {
  std::istringstream in("c comment\np cnf 3 2\n1 2 0\n-1 -3\n0\n");
  const CnfInstance c = read_dimacs(in);
  CHECK(c.num_vars == 3);
  CHECK(c.clauses == std::vector<std::vector<int>>{{1, 2}, {-1, -3}});
  std::ostringstream out;
  write_dimacs(out, c);
  std::istringstream back(out.str());
  CHECK(read_dimacs(back).clauses == c.clauses);
  for (const char* bad : {"1 2 0\n", "p cnf 2 1\n1 5 0\n", "p cnf 2 2\n1 0\n", "p cnf 2 1\n1 2\n"}) {
    std::istringstream s(bad);
    CHECK_THROWS_AS(read_dimacs(s), IoError);
  }
}

TEST_CASE("vertex set syntax") {
  CHECK(parse_vertex_set("0,3", 4) == vs(4, {0, 3}));
  CHECK(parse_vertex_set("{ 1, 2 }", 4) == vs(4, {1, 2}));
  CHECK(parse_vertex_set("", 4).empty());
  CHECK_THROWS(parse_vertex_set("7", 4));
  CHECK_THROWS(parse_vertex_set("a", 4));
}

}  // TEST_SUITE
