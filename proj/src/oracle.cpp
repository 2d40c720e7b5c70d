#include "nrdp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace nrdp {

namespace {

using Mask = std::uint64_t;

struct MaskGraph {
  std::size_t n = 0;
  Mask all = 0;
  std::vector<Mask> open;

  explicit MaskGraph(const Graph& g) : n(g.order()), open(g.order(), 0) {
    if (n > 64) throw OracleCapExceeded("oracle works on graphs with at most 64 vertices");
    all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    for (const auto& [u, v] : g.edges()) {
      open[u] |= Mask{1} << v;
      open[v] |= Mask{1} << u;
    }
  }

  Mask closed_of(Mask s) const {
    Mask out = s;
    for (Mask m = s; m; m &= m - 1) out |= open[std::countr_zero(m)];
    return out;
  }

  bool connected(Mask s) const {
    if (s == 0) return true;
    Mask seen = s & (~s + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= open[std::countr_zero(m)];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == s;
  }

  bool holds(Mask ones, Mask twos, Variant v) const {
    if (n == 0) return true;
    const Mask zeros = all & ~(ones | twos);
    const Mask pos = ones | twos;
    if (v == Variant::kPrdf) {
      for (Mask m = zeros; m; m &= m - 1)
        if (std::popcount(open[std::countr_zero(m)] & twos) != 1) return false;
      return true;
    }
    for (Mask m = zeros; m; m &= m - 1)
      if ((open[std::countr_zero(m)] & twos) == 0) return false;
    switch (v) {
      case Variant::kRdf: return true;
      case Variant::kMrdf: return closed_of(zeros) != all;
      case Variant::kTrdf:
        for (Mask m = pos; m; m &= m - 1)
          if ((open[std::countr_zero(m)] & pos) == 0) return false;
        return true;
      case Variant::kCrdf: return connected(pos);
      case Variant::kPrdf: break;
    }
    return false;
  }
};

void masks_of(const RomanFunction& f, Mask& ones, Mask& twos) {
  ones = twos = 0;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] == 1) ones |= Mask{1} << v;
    if (f[v] == 2) twos |= Mask{1} << v;
  }
}

RomanFunction from_digits(const std::vector<std::uint8_t>& d) { return RomanFunction(d); }

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw OracleCapExceeded(std::string(what) + ": " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// Walks all 3^n functions in base-3 index order (vertex 0 is the least significant digit),
// computing for each the minimal flag via the down-closure table.
template <class Visit>
void scan_minimal(const MaskGraph& mg, Variant variant, Visit&& visit) {
  const std::size_t n = mg.n;
  std::size_t total = 1;
  std::vector<std::size_t> pow3(n + 1, 1);
  for (std::size_t i = 0; i < n; ++i) pow3[i + 1] = pow3[i] * 3;
  total = pow3[n];
  // below[idx]: f itself or something below f has the property.
  std::vector<std::uint8_t> below(total, 0);
  std::vector<std::uint8_t> digits(n, 0);
  Mask ones = 0, twos = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const bool has = mg.holds(ones, twos, variant);
    bool dominated = false;
    for (std::size_t v = 0; v < n && !dominated; ++v)
      if (digits[v] > 0 && below[idx - pow3[v]]) dominated = true;
    below[idx] = has || dominated;
    if (has && !dominated) visit(digits, ones, twos);
    // odometer increment
    for (std::size_t v = 0; v < n; ++v) {
      const Mask bit = Mask{1} << v;
      if (digits[v] == 0) {
        digits[v] = 1;
        ones |= bit;
        break;
      }
      if (digits[v] == 1) {
        digits[v] = 2;
        ones &= ~bit;
        twos |= bit;
        break;
      }
      digits[v] = 0;
      twos &= ~bit;
    }
  }
}

}  // namespace

bool oracle_has_property(const Graph& g, const RomanFunction& f, Variant v) {
  if (f.size() != g.order()) throw std::invalid_argument("function length does not match graph order");
  MaskGraph mg(g);
  Mask ones, twos;
  masks_of(f, ones, twos);
  return mg.holds(ones, twos, v);
}

std::vector<RomanFunction> oracle_property_holders(const Graph& g, Variant variant, std::size_t cap) {
  check_cap(g.order(), cap, "oracle_property_holders");
  MaskGraph mg(g);
  const std::size_t n = g.order();
  std::vector<RomanFunction> out;
  std::vector<std::uint8_t> d(n, 0);
  while (true) {
    Mask ones = 0, twos = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (d[v] == 1) ones |= Mask{1} << v;
      if (d[v] == 2) twos |= Mask{1} << v;
    }
    if (mg.holds(ones, twos, variant)) out.push_back(from_digits(d));
    std::size_t v = 0;
    while (v < n && d[v] == 2) d[v++] = 0;
    if (v == n) break;
    ++d[v];
  }
  return out;
}

bool oracle_is_minimal(const Graph& g, const RomanFunction& f, Variant variant, std::size_t cap) {
  if (f.size() != g.order()) throw std::invalid_argument("function length does not match graph order");
  check_cap(g.order(), cap, "oracle_is_minimal");
  MaskGraph mg(g);
  Mask ones, twos;
  masks_of(f, ones, twos);
  if (!mg.holds(ones, twos, variant)) return false;
  const std::size_t n = g.order();
  std::vector<std::uint8_t> d(n, 0);
  while (true) {
    bool equal = true;
    for (std::size_t v = 0; v < n; ++v) equal = equal && d[v] == f[v];
    if (!equal) {
      Mask o = 0, t = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (d[v] == 1) o |= Mask{1} << v;
        if (d[v] == 2) t |= Mask{1} << v;
      }
      if (mg.holds(o, t, variant)) return false;
    }
    std::size_t v = 0;
    while (v < n && d[v] == f[v]) d[v++] = 0;
    if (v == n) break;
    ++d[v];
  }
  return true;
}

std::vector<RomanFunction> oracle_all_minimal(const Graph& g, Variant v, std::size_t cap) {
  check_cap(g.order(), cap, "oracle_all_minimal");
  MaskGraph mg(g);
  std::vector<RomanFunction> out;
  scan_minimal(mg, v, [&](const std::vector<std::uint8_t>& d, Mask, Mask) { out.push_back(from_digits(d)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RomanFunction> oracle_fixed_two_slice(const Graph& g, Variant variant, const VertexSet& a,
                                                  std::size_t free_cap) {
  if (a.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph order");
  MaskGraph mg(g);
  Mask twos = 0;
  a.for_each([&](Vertex v) { twos |= Mask{1} << v; });
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!a.contains(v)) free.push_back(v);
  check_cap(free.size(), free_cap, "oracle_fixed_two_slice free vertices");
  const std::size_t k = free.size();
  const std::size_t total = std::size_t{1} << k;
  std::vector<std::uint8_t> below(total, 0);
  std::vector<RomanFunction> out;
  for (std::size_t s = 0; s < total; ++s) {
    Mask ones = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((s >> i) & 1U) ones |= Mask{1} << free[i];
    const bool has = mg.holds(ones, twos, variant);
    bool dominated = false;
    for (std::size_t i = 0; i < k && !dominated; ++i)
      if (((s >> i) & 1U) && below[s & ~(std::size_t{1} << i)]) dominated = true;
    below[s] = has || dominated;
    if (has && !dominated) {
      std::vector<std::uint8_t> d(g.order(), 0);
      for (std::size_t v = 0; v < g.order(); ++v) d[v] = ((twos >> v) & 1U) ? 2 : ((ones >> v) & 1U) ? 1 : 0;
      out.push_back(from_digits(d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RomanFunction> oracle_fixed_two(const Graph& g, Variant variant, const VertexSet& a,
                                            std::size_t free_cap) {
  if (a.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph order");
  MaskGraph mg(g);
  Mask twos = 0;
  a.for_each([&](Vertex v) { twos |= Mask{1} << v; });
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!a.contains(v)) free.push_back(v);
  check_cap(free.size(), free_cap, "oracle_fixed_two free vertices");
  const std::size_t k = free.size();
  const std::size_t total = std::size_t{1} << k;
  std::vector<RomanFunction> out;
  for (std::size_t s = 0; s < total; ++s) {
    Mask ones = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((s >> i) & 1U) ones |= Mask{1} << free[i];
    if (!mg.holds(ones, twos, variant)) continue;
    std::vector<std::uint8_t> d(g.order(), 0);
    for (std::size_t v = 0; v < g.order(); ++v) d[v] = ((twos >> v) & 1U) ? 2 : ((ones >> v) & 1U) ? 1 : 0;
    RomanFunction f = from_digits(d);
    bool minimal = true;
    if (variant == Variant::kPrdf) {
      minimal = oracle_is_minimal(g, f, variant, g.order());
    } else {
      for (Mask m = ones; m && minimal; m &= m - 1) {
        const Mask bit = m & (~m + 1);
        if (mg.holds(ones & ~bit, twos, variant)) minimal = false;
      }
      for (Mask m = twos; m && minimal; m &= m - 1) {
        const Mask bit = m & (~m + 1);
        if (mg.holds(ones | bit, twos & ~bit, variant)) minimal = false;
      }
    }
    if (minimal) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_property_is_upward_closed(const Graph& g, Variant variant, std::size_t cap) {
  check_cap(g.order(), cap, "oracle_property_is_upward_closed");
  MaskGraph mg(g);
  const std::size_t n = g.order();
  std::vector<std::uint8_t> d(n, 0);
  while (true) {
    Mask ones = 0, twos = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (d[v] == 1) ones |= Mask{1} << v;
      if (d[v] == 2) twos |= Mask{1} << v;
    }
    if (mg.holds(ones, twos, variant)) {
      for (std::size_t v = 0; v < n; ++v) {
        const Mask bit = Mask{1} << v;
        if (d[v] == 0 && !mg.holds(ones | bit, twos, variant)) return false;
        if (d[v] == 1 && !mg.holds(ones & ~bit, twos | bit, variant)) return false;
      }
    }
    std::size_t v = 0;
    while (v < n && d[v] == 2) d[v++] = 0;
    if (v == n) break;
    ++d[v];
  }
  return true;
}

std::vector<RomanFunction> oracle_fixed_two_global(const Graph& g, Variant v, const VertexSet& a, std::size_t cap) {
  std::vector<RomanFunction> out;
  for (auto& f : oracle_all_minimal(g, v, cap))
    if (f.level(2) == a) out.push_back(std::move(f));
  return out;
}

bool oracle_extension(const Graph& g, const RomanFunction& f, Variant v, std::size_t cap) {
  if (f.size() != g.order()) throw std::invalid_argument("function length does not match graph order");
  check_cap(g.order(), cap, "oracle_extension");
  MaskGraph mg(g);
  bool found = false;
  scan_minimal(mg, v, [&](const std::vector<std::uint8_t>& d, Mask, Mask) {
    if (found) return;
    bool above = true;
    for (std::size_t x = 0; x < d.size() && above; ++x) above = d[x] >= f[x];
    found = above;
  });
  return found;
}

bool oracle_extension_dominating_set(const Graph& g, const VertexSet& u, std::size_t cap) {
  check_cap(g.order(), cap, "oracle_extension_dominating_set");
  MaskGraph mg(g);
  Mask um = 0;
  u.for_each([&](Vertex v) { um |= Mask{1} << v; });
  const std::size_t total = std::size_t{1} << g.order();
  for (std::size_t d = 0; d < total; ++d) {
    const Mask dm = d;
    if ((dm & um) != um || mg.closed_of(dm) != mg.all) continue;
    bool minimal = true;
    for (Mask m = dm; m && minimal; m &= m - 1) {
      const Mask rest = dm & ~(m & (~m + 1));
      if (mg.closed_of(rest) == mg.all) minimal = false;
    }
    if (minimal) return true;
  }
  return false;
}

void Hypergraph::validate() const {
  for (const auto& e : edges) {
    if (e.universe() != universe_size) throw std::invalid_argument("hyperedge over a different universe");
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
  }
}

std::vector<VertexSet> oracle_transversals(const Hypergraph& h, std::size_t cap) {
  h.validate();
  check_cap(h.universe_size, cap, "oracle_transversals");
  std::vector<Mask> edges;
  for (const auto& e : h.edges) {
    Mask m = 0;
    e.for_each([&](Vertex v) { m |= Mask{1} << v; });
    edges.push_back(m);
  }
  auto hits = [&](Mask s) {
    for (Mask e : edges)
      if ((e & s) == 0) return false;
    return true;
  };
  std::vector<VertexSet> out;
  const std::size_t total = std::size_t{1} << h.universe_size;
  for (std::size_t s = 0; s < total; ++s) {
    if (!hits(s)) continue;
    bool minimal = true;
    for (Mask m = s; m && minimal; m &= m - 1)
      if (hits(s & ~(m & (~m + 1)))) minimal = false;
    if (!minimal) continue;
    VertexSet t(h.universe_size);
    for (std::size_t v = 0; v < h.universe_size; ++v)
      if ((s >> v) & 1U) t.insert(v);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies(const CnfInstance& c, const std::vector<bool>& assignment) {
  for (const auto& clause : c.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit) - 1;
      if (var >= assignment.size()) throw std::invalid_argument("literal refers to unknown variable");
      if (assignment[var] == (lit > 0)) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

std::optional<std::vector<bool>> oracle_sat(const CnfInstance& c, std::size_t cap) {
  check_cap(c.num_vars, cap, "oracle_sat");
  const std::size_t total = std::size_t{1} << c.num_vars;
  std::vector<bool> a(c.num_vars);
  for (std::size_t s = 0; s < total; ++s) {
    for (std::size_t i = 0; i < c.num_vars; ++i) a[i] = (s >> i) & 1U;
    if (satisfies(c, a)) return a;
  }
  return std::nullopt;
}

}  // namespace nrdp
