#include <doctest.h>

#include <sstream>

#include "nrdp/bench.hpp"

using namespace nrdp;

TEST_SUITE("bench") {

TEST_CASE("line fit") {
  const LineFit f = fit_line({1, 2, 3}, {3, 5, 7});
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.max_abs_residual == doctest::Approx(0.0));
  CHECK_THROWS_AS(fit_line({1}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(fit_line({2, 2}, {1, 3}), std::invalid_argument);
}

TEST_CASE("csv rows") {
  BenchConfig cfg;
  cfg.family = "gn";
  cfg.variant = Variant::kCrdf;
  cfg.n_min = 3;
  cfg.n_max = 4;
  const auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].c_at_example == std::optional<std::size_t>{4});
  CHECK(rows[1].c_at_example == std::optional<std::size_t>{8});
  std::ostringstream out;
  write_bench_csv(out, rows);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "family,variant,n,seed,outputs,sets_explored,empty_sets_explored,max_consecutive_empty,n_squared,"
        "max_inter_output_work,seconds,max_delay_us,c_at_example");
  std::string row;
  std::getline(lines, row);
  CHECK(row.rfind("gn,crdf,3,3001,", 0) == 0);
}

TEST_CASE("families") {
  Rng rng(1);
  for (const auto& f : bench_families()) {
    const FamilyInstance inst = make_family_instance(f, 5, rng);
    CHECK(inst.graph.order() == (f == "gn" ? 13u : 5u));
  }
  CHECK_THROWS_AS(make_family_instance("nope", 5, rng), std::invalid_argument);
  BenchConfig bad;
  bad.n_min = 5;
  bad.n_max = 4;
  CHECK_THROWS_AS(run_bench(bad), std::invalid_argument);
}

}  // TEST_SUITE
