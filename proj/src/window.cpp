#include "nrdp/window.hpp"

#include <stdexcept>

namespace nrdp {

WindowPredicateTables::WindowPredicateTables(const Graph& g, const IntervalModel& m, const VertexSet& a)
    : g_(&g), a_(a) {
  if (!validate_interval_model(g, m)) throw std::invalid_argument("interval model does not realize the graph");
  const RomanFunction fa = bijection_f(g, a);
  ones_ = fa.level(1);
  base_ = ones_ | a;
  if (base_.empty()) throw std::invalid_argument("window tables need a nonempty V_1 ∪ A");
  universe_ = m.sorted(fa.level(0));
  u_ = universe_.size();

  bool first = true;
  base_.for_each([&](Vertex v) {
    if (first) {
      s_ = t_ = v;
      first = false;
      return;
    }
    if (m[v].left < m[s_].left) s_ = v;
    if (m[v].right > m[t_].right) t_ = v;
  });

  start_.assign(u_ * u_ * u_, 0);
  end_.assign(u_ * u_ * u_, 0);
  window_.assign(u_ * u_ * u_ * u_, 0);
  for (std::size_t i = 0; i < u_; ++i)
    for (std::size_t j = i + 1; j < u_; ++j)
      for (std::size_t k = j + 1; k < u_; ++k) {
        const Vertex x = universe_[i], y = universe_[j], z = universe_[k];
        start_[triple(i, j, k)] = eval_start(x, y, z);
        end_[triple(i, j, k)] = eval_end(x, y, z);
        for (std::size_t l = k + 1; l < u_; ++l) window_[quad(i, j, k, l)] = eval_window(x, y, z, universe_[l]);
      }
}

VertexSet WindowPredicateTables::with(std::initializer_list<Vertex> vs) const {
  VertexSet s = base_;
  for (Vertex v : vs) s.insert(v);
  return s;
}

bool WindowPredicateTables::private_ok(const VertexSet& extra) const {
  const VertexSet host = g_->all() - (ones_ | extra);
  return private_neighbor_condition(*g_, a_, host);
}

bool WindowPredicateTables::reaches(Vertex from, Vertex to, const VertexSet& set) const {
  return component_within(*g_, set, from).contains(to);
}

bool WindowPredicateTables::eval_start(Vertex x, Vertex y, Vertex z) const {
  VertexSet t(g_->order(), {x, y, z});
  return private_ok(t) && reaches(s_, z, with({x, y, z})) && !reaches(s_, z, with({x, z})) &&
         !reaches(s_, z, with({y, z}));
}

bool WindowPredicateTables::eval_end(Vertex x, Vertex y, Vertex z) const {
  VertexSet t(g_->order(), {x, y, z});
  return private_ok(t) && reaches(t_, x, with({x, y, z})) && !reaches(t_, x, with({x, z})) &&
         !reaches(t_, x, with({x, y}));
}

bool WindowPredicateTables::eval_window(Vertex w, Vertex x, Vertex y, Vertex z) const {
  VertexSet t(g_->order(), {w, x, y, z});
  return private_ok(t) && reaches(w, z, with({w, x, y, z})) && !reaches(w, z, with({w, x, z})) &&
         !reaches(w, z, with({w, y, z}));
}

bool WindowPredicateTables::chain_accepts(const std::vector<std::size_t>& p) const {
  const std::size_t k = p.size();
  if (k < 4) throw std::invalid_argument("chain test needs at least four positions");
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (p[i] >= p[i + 1] || p[i + 1] >= u_) throw std::invalid_argument("chain positions must increase");
  if (!start(p[0], p[1], p[2]) || !end(p[k - 3], p[k - 2], p[k - 1])) return false;
  for (std::size_t i = 0; i + 3 < k; ++i)
    if (!window(p[i], p[i + 1], p[i + 2], p[i + 3])) return false;
  return true;
}

WindowPredicateTables build_window_tables(const Graph& g, const IntervalModel& m, const VertexSet& a) {
  return WindowPredicateTables(g, m, a);
}

IntervalCrdfSolver::IntervalCrdfSolver(Graph g, IntervalModel model) : g_(std::move(g)), model_(std::move(model)) {
  if (!validate_interval_model(g_, model_)) throw std::invalid_argument("interval model does not realize the graph");
}

bool IntervalCrdfSolver::enumerate(const VertexSet& a, const FunctionSink& sink) const {
  const RomanFunction fa = bijection_f(g_, a);
  const std::vector<Vertex> universe = model_.sorted(fa.level(0));
  const std::size_t u = universe.size();
  const std::size_t n = g_.order();

  auto try_emit = [&](std::initializer_list<std::size_t> positions) {
    VertexSet x(n);
    for (auto p : positions) x.insert(universe[p]);
    RomanFunction cand = fa.plus(x);
    if (!is_minimal_variant(g_, cand, Variant::kCrdf)) return true;
    return sink(cand);
  };

  if (!try_emit({})) return false;
  for (std::size_t i = 0; i < u; ++i)
    if (!try_emit({i})) return false;
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = i + 1; j < u; ++j)
      if (!try_emit({i, j})) return false;
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = i + 1; j < u; ++j)
      for (std::size_t k = j + 1; k < u; ++k)
        if (!try_emit({i, j, k})) return false;

  return enumerate_large(a, sink);
}

bool IntervalCrdfSolver::enumerate_large(const VertexSet& a, const FunctionSink& sink) const {
  const RomanFunction fa = bijection_f(g_, a);
  if (fa.positive().empty() || fa.level(0).size() < 4) return true;
  const WindowPredicateTables tables(g_, model_, a);
  const std::size_t u = tables.universe().size();
  auto id = [u](std::size_t i, std::size_t j, std::size_t k) { return (i * u + j) * u + k; };

  // live[node]: some path from node ends in an end-triple. Edges go from (i,j,k) to
  // (j,k,l), so nodes with a larger first position are settled first.
  std::vector<char> live(u * u * u, 0);
  for (std::size_t i = u; i-- > 0;)
    for (std::size_t j = i + 1; j < u; ++j)
      for (std::size_t k = j + 1; k < u; ++k) {
        bool ok = tables.end(i, j, k);
        for (std::size_t l = k + 1; l < u && !ok; ++l) ok = tables.window(i, j, k, l) && live[id(j, k, l)];
        live[id(i, j, k)] = ok;
      }

  std::vector<std::size_t> chain;
  bool keep_going = true;
  // Depth-first over live successors; every call below the source emits before returning.
  auto dfs = [&](auto&& self, std::size_t i, std::size_t j, std::size_t k) -> void {
    if (chain.size() >= 4 && tables.end(i, j, k)) {
      VertexSet x(g_.order());
      for (auto p : chain) x.insert(tables.universe()[p]);
      if (!sink(fa.plus(x))) {
        keep_going = false;
        return;
      }
    }
    for (std::size_t l = k + 1; l < u && keep_going; ++l) {
      if (!tables.window(i, j, k, l) || !live[id(j, k, l)]) continue;
      chain.push_back(l);
      self(self, j, k, l);
      chain.pop_back();
    }
  };

  for (std::size_t i = 0; i < u && keep_going; ++i)
    for (std::size_t j = i + 1; j < u && keep_going; ++j)
      for (std::size_t k = j + 1; k < u && keep_going; ++k) {
        if (!tables.start(i, j, k)) continue;
        chain = {i, j, k};
        dfs(dfs, i, j, k);
      }
  return keep_going;
}

std::vector<RomanFunction> c_crdf_interval(const Graph& g, const IntervalModel& m, const VertexSet& a) {
  return IntervalCrdfSolver(g, m).collect(a);
}

}  // namespace nrdp
