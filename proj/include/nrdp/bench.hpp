#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nrdp/engine.hpp"
#include "nrdp/generators.hpp"

namespace nrdp {

// Families: path, random, interval-random, cobipartite-random, gn.
struct FamilyInstance {
  Graph graph;
  std::optional<IntervalModel> model;
  std::optional<CobipartitePartition> partition;
  std::optional<VertexSet> example_a;  // gn only
};

// Throws std::invalid_argument for an unknown family or an n the family cannot build.
FamilyInstance make_family_instance(const std::string& family, std::size_t n, Rng& rng);
const std::vector<std::string>& bench_families();

// The solver the bench and the CLI use for a family instance.
std::unique_ptr<FixedTwoSolver> family_solver(const FamilyInstance& inst, Variant variant);

struct BenchConfig {
  std::string family = "path";
  Variant variant = Variant::kRdf;
  std::size_t n_min = 4;
  std::size_t n_max = 10;
  std::uint64_t seed = 1;
  std::size_t samples = 1;  // instances per n (random families)
};

struct BenchRow {
  std::string family;
  Variant variant = Variant::kRdf;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  EnumerationStats stats;
  double seconds = 0;
  double max_delay_us = 0;  // wall clock between consecutive outputs
  std::optional<std::size_t> c_at_example;  // gn: |C[A]| at A = {a_2, a_4, ...}
};

// One row per (n, sample). Instance seeds are seed + 1000 * n + sample.
std::vector<BenchRow> run_bench(const BenchConfig& config);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double max_abs_residual = 0;
};

// Least squares y = intercept + slope * x. Needs two distinct x values.
LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

// log2(sets_explored) against n, summed over samples of the same n.
LineFit sets_explored_growth(const std::vector<BenchRow>& rows);
// ln(max_inter_output_work) against ln(n): the slope estimates the degree of a polynomial delay bound.
LineFit delay_degree(const std::vector<BenchRow>& rows);

}  // namespace nrdp
