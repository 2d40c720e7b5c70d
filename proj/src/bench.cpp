#include "nrdp/bench.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "nrdp/window.hpp"

namespace nrdp {

const std::vector<std::string>& bench_families() {
  static const std::vector<std::string> names{"path", "random", "interval-random", "cobipartite-random", "gn"};
  return names;
}

FamilyInstance make_family_instance(const std::string& family, std::size_t n, Rng& rng) {
  FamilyInstance inst;
  if (family == "path") {
    inst.graph = path_graph(n);
    std::vector<Interval> iv;
    for (std::size_t i = 0; i < n; ++i) iv.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(i) + 1});
    inst.model = IntervalModel(iv);
  } else if (family == "random") {
    inst.graph = random_graph(n, 0.5, rng);
  } else if (family == "interval-random") {
    auto r = random_interval_graph(n, static_cast<std::int64_t>(3 * n), 5, rng);
    inst.graph = std::move(r.graph);
    inst.model = std::move(r.model);
  } else if (family == "cobipartite-random") {
    auto r = random_cobipartite(n, 0.3, rng);
    inst.graph = std::move(r.graph);
    inst.partition = std::move(r.partition);
  } else if (family == "gn") {
    auto ex = example_graph_gn(n);
    inst.graph = std::move(ex.graph);
    inst.model = std::move(ex.model);
    inst.example_a = std::move(ex.a_set);
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  return inst;
}

std::unique_ptr<FixedTwoSolver> family_solver(const FamilyInstance& inst, Variant variant) {
  if (variant == Variant::kRdf || variant == Variant::kMrdf)
    return make_solver(inst.graph, variant, GraphClass::kGeneral);
  if (inst.partition) return std::make_unique<CobipartiteSolver>(inst.graph, *inst.partition, variant);
  if (inst.model) return make_solver(inst.graph, variant, GraphClass::kInterval, &*inst.model);
  return make_solver(inst.graph, variant, GraphClass::kGeneral);
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.n_min > config.n_max) throw std::invalid_argument("n-min exceeds n-max");
  std::vector<BenchRow> rows;
  using Clock = std::chrono::steady_clock;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    for (std::size_t sample = 0; sample < config.samples; ++sample) {
      BenchRow row;
      row.family = config.family;
      row.variant = config.variant;
      row.n = n;
      row.seed = config.seed + 1000 * n + sample;
      Rng rng(row.seed);
      const FamilyInstance inst = make_family_instance(config.family, n, rng);
      const auto solver = family_solver(inst, config.variant);
      EngineOptions options;
      options.verify = false;
      const auto start = Clock::now();
      auto last = start;
      double max_delay = 0;
      row.stats = enumerate_minimal(
          inst.graph, config.variant, *solver,
          [&](const RomanFunction&) {
            const auto now = Clock::now();
            max_delay = std::max(max_delay, std::chrono::duration<double, std::micro>(now - last).count());
            last = now;
            return true;
          },
          options);
      const auto stop = Clock::now();
      max_delay = std::max(max_delay, std::chrono::duration<double, std::micro>(stop - last).count());
      row.seconds = std::chrono::duration<double>(stop - start).count();
      row.max_delay_us = max_delay;
      if (inst.example_a) row.c_at_example = solver->collect(*inst.example_a).size();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  const bool example = !rows.empty() && rows.front().c_at_example.has_value();
  out << "family,variant,n,seed,outputs,sets_explored,empty_sets_explored,max_consecutive_empty,n_squared,"
         "max_inter_output_work,seconds,max_delay_us";
  if (example) out << ",c_at_example";
  out << '\n';
  for (const auto& r : rows) {
    out << r.family << ',' << variant_name(r.variant) << ',' << r.n << ',' << r.seed << ',' << r.stats.outputs << ','
        << r.stats.sets_explored << ',' << r.stats.empty_sets_explored << ',' << r.stats.max_consecutive_empty << ','
        << r.n * r.n << ',' << r.stats.max_inter_output_work << ',' << r.seconds << ',' << r.max_delay_us;
    if (example) out << ',' << (r.c_at_example ? std::to_string(*r.c_at_example) : "");
    out << '\n';
  }
}

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("fit needs at least two points");
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("fit needs two distinct x values");
  LineFit fit;
  fit.slope = (k * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / k;
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.max_abs_residual = std::max(fit.max_abs_residual, std::abs(ys[i] - fit.intercept - fit.slope * xs[i]));
  return fit;
}

LineFit sets_explored_growth(const std::vector<BenchRow>& rows) {
  std::map<std::size_t, double> total;
  for (const auto& r : rows) total[r.n] += static_cast<double>(r.stats.sets_explored);
  std::vector<double> xs, ys;
  for (const auto& [n, s] : total) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::log2(s));
  }
  return fit_line(xs, ys);
}

LineFit delay_degree(const std::vector<BenchRow>& rows) {
  std::map<std::size_t, double> worst;
  for (const auto& r : rows)
    worst[r.n] = std::max(worst[r.n], static_cast<double>(r.stats.max_inter_output_work));
  std::vector<double> xs, ys;
  for (const auto& [n, w] : worst) {
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(w));
  }
  return fit_line(xs, ys);
}

}  // namespace nrdp
