#include "netreconf/experiment.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "netreconf/bounds.hpp"
#include "netreconf/grid.hpp"
#include "netreconf/layered_matching.hpp"
#include "netreconf/minmin.hpp"
#include "netreconf/ride.hpp"

namespace netreconf {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kAlgorithmNames{{
    {Algorithm::dfs, "dfs"},
    {Algorithm::spt, "spt"},
    {Algorithm::ride, "ride"},
    {Algorithm::minmin, "minmin"},
    {Algorithm::lm, "lm"},
    {Algorithm::branch_exchange, "branch_exchange"},
    {Algorithm::brute_force, "brute_force"},
}};

using Clock = std::chrono::steady_clock;

RootedTree run_algorithm(const BenchInstance& instance, Algorithm algorithm, std::uint64_t seed,
                         const ExperimentConfig& config) {
  const Network& net = instance.net;
  switch (algorithm) {
    case Algorithm::dfs:
      return dfs_tree(net, seed);
    case Algorithm::spt:
      return shortest_path_tree(net);
    case Algorithm::ride:
      return ride(net, seed).tree;
    case Algorithm::minmin:
      if (!instance.grid) throw std::invalid_argument("minmin needs a grid instance");
      return minmin(instance.grid->first, instance.grid->second, net).tree;
    case Algorithm::lm:
      return lm_heuristic(net).tree;
    case Algorithm::branch_exchange: {
      if (config.branch_exchange_start == Algorithm::branch_exchange)
        throw std::invalid_argument("branch exchange cannot start from itself");
      const RootedTree start = run_algorithm(instance, config.branch_exchange_start, seed, config);
      return branch_exchange(net, start, config.budget).tree;
    }
    case Algorithm::brute_force:
      return brute_force_opt(net, config.enumeration_cap).tree;
  }
  throw std::invalid_argument("unknown algorithm");
}

std::vector<ResultRecord> run_instance(const BenchInstance& instance, const ExperimentConfig& config) {
  std::vector<ResultRecord> rows;
  double relax = std::nan("");
  std::optional<double> cut;
  std::string instance_error;
  try {
    relax = flow_relaxation_bound(instance.net);
    if (instance.grid && instance.net.root() == 0 &&
        is_grid_subgraph(instance.net, instance.grid->first, instance.grid->second)) {
      const auto family =
          CutFamily::build(instance.net, diagonal_cut_sets(instance.grid->first, instance.grid->second));
      if (!family.cuts.empty()) cut = cut_lower_bound(instance.net, family);
    }
  } catch (const std::exception& ex) {
    instance_error = ex.what();
  }

  for (Algorithm algorithm : config.algorithms) {
    const std::vector<std::uint64_t> seeds =
        is_randomized(algorithm) ? config.seeds : std::vector<std::uint64_t>{0};
    for (std::uint64_t seed : seeds) {
      ResultRecord rec;
      rec.instance = instance.id;
      rec.family = instance.family;
      rec.p = instance.p;
      rec.algorithm = algorithm;
      rec.seed = seed;
      rec.relax_bound = relax;
      rec.cut_bound = cut;
      if (!instance_error.empty()) {
        rec.error = instance_error;
        rows.push_back(std::move(rec));
        continue;
      }
      try {
        const auto t0 = Clock::now();
        const RootedTree tree = run_algorithm(instance, algorithm, seed, config);
        const auto t1 = Clock::now();
        rec.energy = tree_energy(instance.net, tree);
        if (config.record_timing) rec.time_s = std::chrono::duration<double>(t1 - t0).count();
      } catch (const std::exception& ex) {
        rec.error = ex.what();
      }
      rows.push_back(std::move(rec));
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (const ResultRecord& rec : rows)
    if (rec.ok()) best = std::min(best, rec.energy);
  for (ResultRecord& rec : rows) {
    if (!rec.ok()) continue;
    rec.gap = best > 0.0 ? (rec.energy - best) / best : 0.0;
  }
  return rows;
}

std::string number(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += "\"\"";
    else if (c == '\n' || c == '\r') out += ' ';
    else out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [a, name] : kAlgorithmNames)
    if (a == algorithm) return name;
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& [a, text] : kAlgorithmNames)
    if (text == name) return a;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

bool is_randomized(Algorithm algorithm) {
  return algorithm == Algorithm::dfs || algorithm == Algorithm::ride || algorithm == Algorithm::branch_exchange;
}

std::vector<ResultRecord> run_benchmark(const ExperimentConfig& config) {
  if (config.algorithms.empty()) throw std::invalid_argument("no algorithms selected");
  if (config.instances.empty()) throw std::invalid_argument("no instances given");
  if (config.seeds.empty()) throw std::invalid_argument("no seeds given");

  if (config.record_timing) {
    for (Algorithm algorithm : config.algorithms) {
      try {
        run_algorithm(config.instances.front(), algorithm, config.seeds.front(), config);
      } catch (const std::exception&) {
        // The timed runs record the failure.
      }
    }
  }

  std::vector<std::vector<ResultRecord>> per_instance(config.instances.size());
  const std::size_t workers = std::clamp<std::size_t>(config.threads, 1, config.instances.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < config.instances.size(); ++i)
      per_instance[i] = run_instance(config.instances[i], config);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < config.instances.size(); i = next++)
          per_instance[i] = run_instance(config.instances[i], config);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<ResultRecord> records;
  for (auto& rows : per_instance)
    for (auto& rec : rows) records.push_back(std::move(rec));
  return records;
}

std::string results_csv(const std::vector<ResultRecord>& records) {
  std::ostringstream out;
  out << "instance,algorithm,seed,energy,relax_bound,cut_bound,gap,time_s,status\n";
  for (const ResultRecord& r : records) {
    out << quoted(r.instance) << ',' << to_string(r.algorithm) << ',' << r.seed << ',';
    out << (r.ok() ? number(r.energy) : "") << ',' << number(r.relax_bound) << ',';
    out << (r.cut_bound ? number(*r.cut_bound) : "") << ',';
    out << (r.ok() ? number(r.gap) : "") << ',' << number(r.time_s) << ',';
    out << (r.ok() ? std::string("ok") : quoted(r.error)) << '\n';
  }
  return out.str();
}

std::vector<SummaryRow> summarize(const std::vector<ResultRecord>& records) {
  struct Acc {
    std::vector<double> gaps;
    std::vector<double> times;
  };
  std::map<std::tuple<std::string, double, int>, Acc> groups;
  for (const ResultRecord& r : records) {
    if (!r.ok()) continue;
    auto& acc = groups[{r.family, r.p, static_cast<int>(r.algorithm)}];
    acc.gaps.push_back(r.gap);
    acc.times.push_back(r.time_s);
  }
  auto stats = [](const std::vector<double>& xs) {
    const double k = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= k;
    if (xs.size() < 2) return std::pair{mean, 0.0};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::pair{mean, 1.96 * std::sqrt(ss / (k - 1)) / std::sqrt(k)};
  };
  std::vector<SummaryRow> rows;
  for (const auto& [key, acc] : groups) {
    SummaryRow row;
    row.family = std::get<0>(key);
    row.p = std::get<1>(key);
    row.algorithm = static_cast<Algorithm>(std::get<2>(key));
    row.count = acc.gaps.size();
    std::tie(row.mean_gap, row.gap_half_width) = stats(acc.gaps);
    std::tie(row.mean_time, row.time_half_width) = stats(acc.times);
    rows.push_back(row);
  }
  return rows;
}

std::string summary_text(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-20s %6s %-16s %6s %18s %22s\n", "family", "p", "algorithm", "runs",
                "gap % (95% hw)", "time s (95% hw)");
  out << line;
  for (const SummaryRow& r : rows) {
    std::snprintf(line, sizeof line, "%-20s %6.3f %-16s %6zu %9.3f +- %-6.3f %11.4f +- %-8.4f\n", r.family.c_str(),
                  r.p, std::string(to_string(r.algorithm)).c_str(), r.count, 100.0 * r.mean_gap,
                  100.0 * r.gap_half_width, r.mean_time, r.time_half_width);
    out << line;
  }
  return out.str();
}

}  // namespace netreconf
