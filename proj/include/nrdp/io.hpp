#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nrdp/graph.hpp"
#include "nrdp/interval.hpp"
#include "nrdp/oracle.hpp"

namespace nrdp {

// Unreadable file or malformed contents.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "n m", then m lines "u v". Blank lines and '#' lines are skipped; duplicate edges rejected.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// "n", then n lines "l r".
IntervalModel read_intervals(std::istream& in);
void write_intervals(std::ostream& out, const IntervalModel& m);

// "n m", then m lines of member indices.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

// DIMACS cnf: 'c' comments, "p cnf vars clauses", clauses terminated by 0.
CnfInstance read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfInstance& c);

Graph read_graph_file(const std::string& path);
IntervalModel read_intervals_file(const std::string& path);
Hypergraph read_hypergraph_file(const std::string& path);
CnfInstance read_dimacs_file(const std::string& path);

// "0,3" (braces and spaces tolerated, "" is the empty set).
VertexSet parse_vertex_set(std::string_view text, std::size_t n);

}  // namespace nrdp
