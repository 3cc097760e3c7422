#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netreconf/baselines.hpp"
#include "netreconf/network.hpp"
#include "netreconf/spanning_trees.hpp"

namespace netreconf {

enum class Algorithm { dfs, spt, ride, minmin, lm, branch_exchange, brute_force };

std::string_view to_string(Algorithm algorithm);
/// Accepts the names above; throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view name);
/// True for algorithms whose output depends on the seed.
bool is_randomized(Algorithm algorithm);

struct BenchInstance {
  std::string id;
  std::string family;
  double p = 0.0;
  Network net;
  /// Grid shape, when the instance is a (possibly sparsified) grid with its
  /// root at node 0. Enables the diagonal cut bound and Min-Min.
  std::optional<std::pair<std::size_t, std::size_t>> grid;
};

struct ExperimentConfig {
  std::vector<BenchInstance> instances;
  std::vector<Algorithm> algorithms;
  /// Randomized algorithms run once per seed; the others once, with seed 0.
  std::vector<std::uint64_t> seeds{0};
  /// Starting tree for branch exchange (dfs uses the run's seed).
  Algorithm branch_exchange_start = Algorithm::dfs;
  LocalSearchBudget budget{};
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  /// When false every time_s is written as 0 so output is byte-stable.
  bool record_timing = true;
  /// Worker threads across instances.
  std::size_t threads = 1;
};

struct ResultRecord {
  std::string instance;
  std::string family;
  double p = 0.0;
  Algorithm algorithm = Algorithm::dfs;
  std::uint64_t seed = 0;
  double energy = 0.0;
  double relax_bound = 0.0;
  std::optional<double> cut_bound;
  double gap = 0.0;
  double time_s = 0.0;
  /// Empty on success, otherwise the failure message (energy and gap unset).
  std::string error;

  bool ok() const { return error.empty(); }
};

/// One record per (instance, algorithm, seed), in config order. Gaps are
/// relative to the best energy any run found on the same instance. Failures
/// are recorded in the row, never thrown. Throws std::invalid_argument for an
/// empty algorithm list or instance list.
std::vector<ResultRecord> run_benchmark(const ExperimentConfig& config);

/// Header: instance,algorithm,seed,energy,relax_bound,cut_bound,gap,time_s,status
std::string results_csv(const std::vector<ResultRecord>& records);

struct SummaryRow {
  std::string family;
  double p = 0.0;
  Algorithm algorithm = Algorithm::dfs;
  std::size_t count = 0;
  double mean_gap = 0.0;
  double gap_half_width = 0.0;
  double mean_time = 0.0;
  double time_half_width = 0.0;
};

/// Successful records grouped by (family, p, algorithm) with means and 95%
/// half-widths 1.96 * sd / sqrt(count).
std::vector<SummaryRow> summarize(const std::vector<ResultRecord>& records);
std::string summary_text(const std::vector<SummaryRow>& rows);

}  // namespace netreconf
