#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "netreconf/experiment.hpp"

using namespace netreconf;

namespace {

BenchInstance grid_instance(std::string id, std::size_t side, double p, std::uint64_t seed) {
  return {std::move(id), "sparsified_grid", p, fixtures::sparsified(side, side, p, seed), std::pair{side, side}};
}

}  // namespace

TEST(Algorithm, NamesRoundTrip) {
  for (auto a : {Algorithm::dfs, Algorithm::spt, Algorithm::ride, Algorithm::minmin, Algorithm::lm,
                 Algorithm::branch_exchange, Algorithm::brute_force})
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
  EXPECT_THROW(parse_algorithm("annealing"), std::invalid_argument);
  EXPECT_TRUE(is_randomized(Algorithm::ride));
  EXPECT_FALSE(is_randomized(Algorithm::lm));
}

TEST(RunBenchmark, RecordsPerSeedAndGaps) {
  ExperimentConfig config;
  config.instances.push_back(grid_instance("g0", 4, 0.2, 1));
  config.algorithms = {Algorithm::spt, Algorithm::ride, Algorithm::lm, Algorithm::brute_force};
  config.seeds = {0, 1, 2};
  config.record_timing = false;
  const auto records = run_benchmark(config);
  ASSERT_EQ(records.size(), 1u + 3u + 1u + 1u);
  double best = records.front().energy;
  for (const auto& r : records) {
    ASSERT_TRUE(r.ok()) << r.error;
    best = std::min(best, r.energy);
    EXPECT_EQ(r.time_s, 0.0);
    EXPECT_LE(r.relax_bound, r.energy * (1 + 1e-12));
    ASSERT_TRUE(r.cut_bound.has_value());
    EXPECT_LE(*r.cut_bound, r.energy * (1 + 1e-12));
  }
  EXPECT_EQ(records.back().algorithm, Algorithm::brute_force);
  EXPECT_DOUBLE_EQ(records.back().energy, best);
  for (const auto& r : records) EXPECT_NEAR(r.gap, r.energy / best - 1.0, 1e-12);
}

TEST(RunBenchmark, FailuresStayInTheirRow) {
  ExperimentConfig config;
  BenchInstance plain{"c4", "cycle", 0.0, fixtures::cycle4(), std::nullopt};
  config.instances.push_back(plain);
  config.algorithms = {Algorithm::minmin, Algorithm::dfs};
  const auto records = run_benchmark(config);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_FALSE(records[0].ok());
  EXPECT_TRUE(records[1].ok());
  EXPECT_FALSE(records[1].cut_bound.has_value());
}

TEST(RunBenchmark, CapRefusalIsAFailure) {
  ExperimentConfig config;
  config.instances.push_back(grid_instance("g", 4, 0.0, 3));
  config.algorithms = {Algorithm::brute_force};
  config.enumeration_cap = 10;
  const auto records = run_benchmark(config);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_FALSE(records[0].ok());
}

TEST(RunBenchmark, ThreadsDoNotChangeResults) {
  ExperimentConfig config;
  for (int i = 0; i < 4; ++i) config.instances.push_back(grid_instance("g" + std::to_string(i), 5, 0.3, i));
  config.algorithms = {Algorithm::dfs, Algorithm::lm, Algorithm::branch_exchange};
  config.seeds = {3, 4};
  config.record_timing = false;
  const auto serial = results_csv(run_benchmark(config));
  config.threads = 3;
  EXPECT_EQ(results_csv(run_benchmark(config)), serial);
}

TEST(RunBenchmark, EmptyConfigRejected) {
  ExperimentConfig config;
  EXPECT_THROW(run_benchmark(config), std::invalid_argument);
  config.instances.push_back(grid_instance("g", 3, 0.0, 0));
  EXPECT_THROW(run_benchmark(config), std::invalid_argument);
}

TEST(ResultsCsv, HeaderAndRowShape) {
  ExperimentConfig config;
  config.instances.push_back(grid_instance("g", 3, 0.1, 0));
  config.algorithms = {Algorithm::spt, Algorithm::minmin};
  config.record_timing = false;
  const std::string csv = results_csv(run_benchmark(config));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "instance,algorithm,seed,energy,relax_bound,cut_bound,gap,time_s,status");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8);
  }
  EXPECT_EQ(rows, 2);
}

TEST(Summarize, MeansAndHalfWidths) {
  std::vector<ResultRecord> records;
  for (double gap : {0.1, 0.2, 0.3}) {
    ResultRecord r;
    r.family = "f";
    r.algorithm = Algorithm::dfs;
    r.gap = gap;
    r.time_s = 1.0;
    records.push_back(r);
  }
  ResultRecord failed;
  failed.family = "f";
  failed.error = "boom";
  records.push_back(failed);
  const auto rows = summarize(records);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].count, 3u);
  EXPECT_NEAR(rows[0].mean_gap, 0.2, 1e-12);
  EXPECT_NEAR(rows[0].gap_half_width, 1.96 * 0.1 / std::sqrt(3.0), 1e-12);
  EXPECT_DOUBLE_EQ(rows[0].time_half_width, 0.0);
  EXPECT_NE(summary_text(rows).find("dfs"), std::string::npos);
}
