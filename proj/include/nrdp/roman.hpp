#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nrdp/graph.hpp"

namespace nrdp {

// f: V -> {0,1,2}, stored densely. Also carries the partition V_0 / V_1 / V_2.
class RomanFunction {
 public:
  RomanFunction() = default;
  explicit RomanFunction(std::size_t n) : values_(n, 0) {}
  // Throws std::invalid_argument on values outside {0,1,2}.
  explicit RomanFunction(std::vector<std::uint8_t> values);

  // level * chi_s.
  static RomanFunction characteristic(const VertexSet& s, std::uint8_t level = 1);
  // Parses "2002" (vertex 0 first).
  static RomanFunction parse(std::string_view digits);

  std::size_t size() const { return values_.size(); }
  std::uint8_t operator[](Vertex v) const { return values_.at(v); }
  void set(Vertex v, std::uint8_t value);
  const std::vector<std::uint8_t>& values() const { return values_; }

  VertexSet level(std::uint8_t i) const;
  VertexSet positive() const;  // V_1 ∪ V_2
  std::size_t weight() const;

  // f + chi_s and f - chi_s; throw std::domain_error if a value leaves {0,1,2}.
  RomanFunction plus(const VertexSet& s) const;
  RomanFunction minus(const VertexSet& s) const;
  RomanFunction plus(Vertex v) const;
  RomanFunction minus(Vertex v) const;

  std::string to_string() const;

  friend bool operator==(const RomanFunction&, const RomanFunction&) = default;
  friend auto operator<=>(const RomanFunction&, const RomanFunction&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

VertexSet levels(const RomanFunction& f, std::uint8_t i);

// Pointwise order f <= g. Throws std::invalid_argument on length mismatch.
bool leq(const RomanFunction& f, const RomanFunction& g);

enum class Variant {
  kRdf,   // Roman dominating
  kMrdf,  // maximal: V_0 is not dominating
  kTrdf,  // total: positive vertices induce no isolated vertex
  kCrdf,  // connected: positive vertices induce a connected subgraph
  kPrdf,  // perfect: every 0 has exactly one 2-neighbor (predicate only)
};

std::string_view variant_name(Variant v);
// Accepts rdf/mrdf/trdf/crdf/prdf (case-insensitive).
Variant parse_variant(std::string_view s);

bool is_variant(const Graph& g, const RomanFunction& f, Variant v);

// Which clause of the minimality characterization decided the answer.
struct MinimalityReport {
  bool minimal = false;
  bool has_property = false;
  // Human-readable reasons, one per failing clause; empty when minimal.
  std::vector<std::string> failures;
};

// Decides minimality via the variant's characterization (not by search).
// kPrdf is rejected with std::invalid_argument.
MinimalityReport explain_minimality(const Graph& g, const RomanFunction& f, Variant v);
bool is_minimal_variant(const Graph& g, const RomanFunction& f, Variant v);

// F(A) = 2 chi_A + chi_{V \ N[A]}.
RomanFunction bijection_f(const Graph& g, const VertexSet& a);

// Every v in a has a private neighbor other than itself in G[N[a]].
bool valid_two_set(const Graph& g, const VertexSet& a);

// Every v in twos has a private neighbor other than itself in G[host]; host must contain twos.
bool private_neighbor_condition(const Graph& g, const VertexSet& twos, const VertexSet& host);

// Every v in V_2(f) has a private neighbor other than itself in G[V_0(f) ∪ V_2(f)].
bool two_vertices_have_private_neighbors(const Graph& g, const RomanFunction& f);

// Raising a 0 to 1 keeps the property. Requires v in V_0(f) and f having the property.
bool nrdp_constraint2_holds(const Graph& g, const RomanFunction& f, Vertex v, Variant variant);
// [f - chi_v has the property] iff [v has no private neighbor besides itself in
// G[V_0(f) ∪ V_2(f)]]. Requires v in V_2(f) and f having the property.
bool nrdp_constraint3_holds(const Graph& g, const RomanFunction& f, Vertex v, Variant variant);

}  // namespace nrdp
