#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nrdp/graph.hpp"
#include "nrdp/roman.hpp"

// Exhaustive ground truth. Everything here evaluates the definitions directly on
// 64-bit vertex masks and shares no code with the characterizations in roman.hpp.
namespace nrdp {

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultOracleCap = 10;      // 3^n function scans
inline constexpr std::size_t kDefaultExtensionCap = 12;   // extension brute force
inline constexpr std::size_t kDefaultSliceCap = 24;       // 2^(n - |A|) scans with V_2 fixed

// Definition-level property test.
bool oracle_has_property(const Graph& g, const RomanFunction& f, Variant v);

// Every function with the property, in base-3 order (vertex 0 least significant).
std::vector<RomanFunction> oracle_property_holders(const Graph& g, Variant v, std::size_t cap = kDefaultOracleCap);

// No g <= f, g != f, has the property (checks every such g).
bool oracle_is_minimal(const Graph& g, const RomanFunction& f, Variant v, std::size_t cap = kDefaultExtensionCap);

// All minimal functions with the property, sorted.
std::vector<RomanFunction> oracle_all_minimal(const Graph& g, Variant v, std::size_t cap = kDefaultOracleCap);

// C[A]: globally minimal functions with the property whose 2-set is A. Sorted.
// Scans the 2^(n - |A|) functions with V_2 = A. For rdf/mrdf/trdf/crdf the property is
// closed upwards, so minimality reduces to "no single decrement keeps the property";
// prdf is checked against every smaller function. The cap bounds n - |A|.
std::vector<RomanFunction> oracle_fixed_two(const Graph& g, Variant v, const VertexSet& a,
                                            std::size_t free_cap = kDefaultSliceCap);
// Same set, by filtering oracle_all_minimal (3^n scan).
std::vector<RomanFunction> oracle_fixed_two_global(const Graph& g, Variant v, const VertexSet& a,
                                                   std::size_t cap = kDefaultOracleCap);
// The other reading: minimal elements of {f : property, V_2(f) = A} only. Contains
// oracle_fixed_two but can be strictly larger (an rdf with an invalid 2-set keeps F(A)).
std::vector<RomanFunction> oracle_fixed_two_slice(const Graph& g, Variant v, const VertexSet& a,
                                                  std::size_t free_cap = kDefaultSliceCap);

// Every single raise of a property holder keeps the property (checked over all 3^n functions).
bool oracle_property_is_upward_closed(const Graph& g, Variant v, std::size_t cap = kDefaultOracleCap);

// Is there a minimal function with the property that is >= f?
bool oracle_extension(const Graph& g, const RomanFunction& f, Variant v, std::size_t cap = kDefaultExtensionCap);

// Is there an inclusion-minimal dominating set D of g with u ⊆ D?
bool oracle_extension_dominating_set(const Graph& g, const VertexSet& u, std::size_t cap = 20);

struct Hypergraph {
  std::size_t universe_size = 0;
  std::vector<VertexSet> edges;

  // Throws std::invalid_argument for empty edges or mismatched universes.
  void validate() const;
};

// All inclusion-minimal hitting sets, sorted.
std::vector<VertexSet> oracle_transversals(const Hypergraph& h, std::size_t cap = 20);

// Literals are DIMACS style: +i for x_i, -i for the negation, i >= 1.
struct CnfInstance {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// Satisfying assignment (index i-1 holds x_i) or nothing.
std::optional<std::vector<bool>> oracle_sat(const CnfInstance& c, std::size_t cap = 20);
bool satisfies(const CnfInstance& c, const std::vector<bool>& assignment);

}  // namespace nrdp
