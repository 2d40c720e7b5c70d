#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nrdp/graph.hpp"
#include "nrdp/oracle.hpp"
#include "nrdp/roman.hpp"

namespace nrdp {

// Strict: Monotone 3-SAT-(2,2) (three distinct literals per clause, all positive or all
// negative, every variable exactly twice positive and twice negative).
// Test: monotone clauses of one to three literals, occurrence counts free; duplicate
// literals are merged and flagged.
enum class SatMode { kStrict, kTest };

// Throws std::invalid_argument describing the first violation.
void validate_cnf(const CnfInstance& c, SatMode mode);

struct ExtDsInstance {
  Graph graph;
  VertexSet u;
};

using GadgetSource = std::variant<CnfInstance, Hypergraph, ExtDsInstance>;

struct GadgetInstance {
  std::string kind;
  Graph graph;
  std::optional<VertexSet> fixed_two;
  std::optional<RomanFunction> prefunction;
  std::vector<std::string> labels;  // vertex index -> role
  std::map<std::string, std::string> metadata;
  GadgetSource source;

  // Index of the vertex with this label; throws std::out_of_range.
  Vertex vertex(const std::string& label) const;
};

// Layout: v_i, vbar_i, w_i at 3(i-1), 3(i-1)+1, 3(i-1)+2; then p_1..p_m; then u_i, u'_i pairs.
// A = {w_i} ∪ {u_i}. Strict mode also enforces 2-degenerate and maximum degree 4.
GadgetInstance gadget_crdf_from_sat(const CnfInstance& c, SatMode mode = SatMode::kStrict);

// Same layout without the u block. A = {w_i}. Strict mode also enforces maximum degree 3.
GadgetInstance gadget_trdf_from_sat(const CnfInstance& c, SatMode mode = SatMode::kStrict);

// Layout: q, r, s, t at 0..3, then w_v, x_v at 4+2v, 5+2v.
// Prefunction 2 on {s} ∪ {w_v : v in U}, 1 on {q, t}.
GadgetInstance gadget_maxrd_from_extds(const Graph& g, const VertexSet& u);

// Layout: a, b at 0, 1; u_i at 2+i; w_j at 2+n+j. A = {a}.
// Throws std::invalid_argument if some element lies in every hyperedge or there are no edges.
GadgetInstance gadget_split_from_hypergraph(const Hypergraph& h);

// {i : g(u_i) = 1} for a function on a split gadget.
VertexSet split_gadget_projection(const GadgetInstance& gadget, const RomanFunction& g);

}  // namespace nrdp
