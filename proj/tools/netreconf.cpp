#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netreconf/baselines.hpp"
#include "netreconf/bounds.hpp"
#include "netreconf/error.hpp"
#include "netreconf/experiment.hpp"
#include "netreconf/grid.hpp"
#include "netreconf/instances.hpp"
#include "netreconf/layered_matching.hpp"
#include "netreconf/lp_export.hpp"
#include "netreconf/minmin.hpp"
#include "netreconf/network_io.hpp"
#include "netreconf/ride.hpp"
#include "netreconf/spanning_trees.hpp"

using namespace netreconf;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kRefused = 2;

/// Raised for bad input; maps to exit status 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Network load_valid(const std::string& path) {
  Network net = read_network(path);
  const ValidationReport report = validate_network(net);
  if (!report.ok()) {
    std::string message = "invalid network:";
    for (const auto& v : report.violations) message += "\n  " + v;
    throw UsageError(message);
  }
  return net;
}

struct GridShape {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool given() const { return rows > 0 && cols > 0; }
};

void add_shape(CLI::App* cmd, GridShape& shape) {
  cmd->add_option("--rows", shape.rows, "Grid rows (enables grid-only algorithms and bounds)");
  cmd->add_option("--cols", shape.cols, "Grid columns");
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string kind = "sparsified_grid";
  GeneratorSpec spec;
  std::optional<std::uint64_t> seed;
  std::string out;
};

void setup_gen(CLI::App& app, GenArgs& a) {
  auto* cmd = app.add_subcommand("gen", "Generate an instance file");
  cmd->add_option("--kind", a.kind, "sparsified_grid, parallel_paths, grid_single_demand, cycle_opposite, triplets, full_grid_uniform")
      ->capture_default_str();
  cmd->add_option("--rows", a.spec.rows, "Grid rows");
  cmd->add_option("--cols", a.spec.cols, "Grid columns");
  cmd->add_option("--size", a.spec.size, "Family size for the pathological families");
  cmd->add_option("--p", a.spec.p, "Edge deletion probability in [0, 1)")->capture_default_str();
  cmd->add_option("--demand-min", a.spec.demand_min)->capture_default_str();
  cmd->add_option("--demand-max", a.spec.demand_max)->capture_default_str();
  cmd->add_option("--resistance-min", a.spec.resistance_min)->capture_default_str();
  cmd->add_option("--resistance-max", a.spec.resistance_max)->capture_default_str();
  cmd->add_option("--seed", a.seed, "Generator seed (required for sparsified_grid)");
  cmd->add_option("-o,--out", a.out, "Output file (default stdout)");
}

int run_gen(GenArgs& a) {
  a.spec.kind = parse_instance_kind(a.kind);
  if (a.spec.kind == InstanceKind::sparsified_grid) {
    if (!a.seed) throw UsageError("--seed is required for sparsified_grid");
    a.spec.seed = *a.seed;
  }
  emit(network_to_json(generate(a.spec)), a.out);
  return kOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string instance;
  std::string algorithm;
  std::optional<std::uint64_t> seed;
  GridShape shape;
  std::string start = "dfs";
  bool threshold_halving = false;
  std::size_t max_iterations = std::numeric_limits<std::size_t>::max();
  double time_limit = std::numeric_limits<double>::infinity();
  bool static_relaxation = false;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::string trace;
  std::string out;
};

void setup_solve(CLI::App& app, SolveArgs& a) {
  auto* cmd = app.add_subcommand("solve", "Build a spanning tree with one algorithm");
  cmd->add_option("-i,--instance", a.instance, "Instance JSON")->required();
  cmd->add_option("-a,--algorithm", a.algorithm, "dfs, spt, ride, minmin, lm, branch_exchange, brute_force")->required();
  cmd->add_option("--seed", a.seed, "Seed (required for dfs, ride and branch_exchange)");
  add_shape(cmd, a.shape);
  cmd->add_option("--start", a.start, "Starting tree for branch_exchange: dfs, spt, lm, ride")->capture_default_str();
  cmd->add_flag("--threshold-halving", a.threshold_halving, "Branch exchange with a halving improvement threshold");
  cmd->add_option("--max-iterations", a.max_iterations, "Branch exchange move budget");
  cmd->add_option("--time-limit", a.time_limit, "Branch exchange time budget in seconds");
  cmd->add_flag("--static-relaxation", a.static_relaxation, "LM: compute the relaxed flow once");
  cmd->add_option("--cap", a.cap, "Enumeration cap for brute_force")->capture_default_str();
  cmd->add_option("--trace", a.trace, "Write the RIDe deletion trace to this file");
  cmd->add_option("-o,--out", a.out, "Output file (default stdout)");
}

RootedTree build_tree(const Network& net, Algorithm algorithm, const SolveArgs& a, std::string& trace_json) {
  auto need_seed = [&]() {
    if (!a.seed) throw UsageError("--seed is required for " + std::string(to_string(algorithm)));
    return *a.seed;
  };
  switch (algorithm) {
    case Algorithm::dfs:
      return dfs_tree(net, need_seed());
    case Algorithm::spt:
      return shortest_path_tree(net);
    case Algorithm::ride: {
      RideResult result = ride(net, need_seed());
      trace_json = trace_to_json(result.trace);
      return result.tree;
    }
    case Algorithm::minmin:
      if (!a.shape.given()) throw UsageError("minmin needs --rows and --cols");
      return minmin(a.shape.rows, a.shape.cols, net).tree;
    case Algorithm::lm: {
      LmOptions options;
      options.static_relaxation = a.static_relaxation;
      return lm_heuristic(net, options).tree;
    }
    case Algorithm::branch_exchange: {
      const Algorithm start_kind = parse_algorithm(a.start);
      if (start_kind == Algorithm::branch_exchange || start_kind == Algorithm::brute_force)
        throw UsageError("--start must be a constructive algorithm");
      need_seed();
      std::string ignored;
      const RootedTree start = build_tree(net, start_kind, a, ignored);
      LocalSearchBudget budget;
      budget.max_iterations = a.max_iterations;
      budget.time_limit_s = a.time_limit;
      const auto rule = a.threshold_halving ? ExchangeRule::threshold_halving : ExchangeRule::first_improvement;
      return branch_exchange(net, start, budget, rule).tree;
    }
    case Algorithm::brute_force:
      return brute_force_opt(net, a.cap).tree;
  }
  throw UsageError("unknown algorithm");
}

int run_solve(const SolveArgs& a) {
  const Network net = load_valid(a.instance);
  const Algorithm algorithm = parse_algorithm(a.algorithm);
  std::string trace_json;
  const RootedTree tree = build_tree(net, algorithm, a, trace_json);
  if (!a.trace.empty()) {
    if (trace_json.empty()) throw UsageError("--trace is only available for ride");
    emit(trace_json, a.trace);
  }
  emit(tree_to_json(net, tree), a.out);
  return kOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string instance;
  GridShape shape;
  bool cuts = false;
  std::string out;
};

void setup_bounds(CLI::App& app, BoundsArgs& a) {
  auto* cmd = app.add_subcommand("bounds", "Lower bounds and the shortest-path tree energy");
  cmd->add_option("-i,--instance", a.instance, "Instance JSON")->required();
  add_shape(cmd, a.shape);
  cmd->add_flag("--cuts", a.cuts, "Include the diagonal cut family in the output");
  cmd->add_option("-o,--out", a.out, "Output file (default stdout)");
}

int run_bounds(const BoundsArgs& a) {
  const Network net = load_valid(a.instance);
  nlohmann::json doc;
  doc["flow_relaxation"] = flow_relaxation_bound(net);
  const double spt = tree_energy(net, shortest_path_tree(net));
  doc["shortest_path_tree"] = spt;
  if (a.shape.given()) {
    if (!is_grid_subgraph(net, a.shape.rows, a.shape.cols) || net.root() != 0)
      throw UsageError("instance is not a grid of that shape rooted at node 0");
    const CutFamily family = CutFamily::build(net, diagonal_cut_sets(a.shape.rows, a.shape.cols));
    doc["diagonal_cut_bound"] = cut_lower_bound(net, family);
    try {
      const GridBound grid = grid_diagonal_bound(a.shape.rows, a.shape.cols, net);
      doc["grid_diagonal_bound"] = {{"value", grid.value}, {"upper", grid.upper}, {"lower", grid.lower}};
    } catch (const std::invalid_argument&) {
      // Only full grids with uniform resistance have the sharper bound.
    }
    if (a.cuts) doc["cuts"] = nlohmann::json::parse(cut_family_to_json(family));
  }
  emit(doc.dump(2) + "\n", a.out);
  return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::string> files;
  GridShape shape;
  std::vector<double> ps;
  std::size_t count = 10;
  std::uint64_t instance_seed = 0;
  std::vector<std::string> algorithms;
  std::vector<std::uint64_t> seeds;
  std::string start = "dfs";
  double time_limit = std::numeric_limits<double>::infinity();
  std::uint64_t cap = kDefaultEnumerationCap;
  std::size_t threads = 1;
  bool no_timing = false;
  std::string csv;
  std::string summary;
};

void setup_bench(CLI::App& app, BenchArgs& a) {
  auto* cmd = app.add_subcommand("bench", "Run algorithms over instance sets and report gaps and times");
  cmd->add_option("--instance", a.files, "Instance JSON files (repeatable)");
  add_shape(cmd, a.shape);
  cmd->add_option("--p", a.ps, "Sparsification probabilities for generated grids");
  cmd->add_option("--count", a.count, "Generated grids per probability")->capture_default_str();
  cmd->add_option("--instance-seed", a.instance_seed, "First seed for generated grids")->capture_default_str();
  cmd->add_option("-a,--algorithms", a.algorithms, "Algorithms to run")->required()->delimiter(',');
  cmd->add_option("--seed", a.seeds, "Seeds for randomized algorithms")->delimiter(',');
  cmd->add_option("--start", a.start, "Starting tree for branch_exchange")->capture_default_str();
  cmd->add_option("--time-limit", a.time_limit, "Branch exchange time budget in seconds");
  cmd->add_option("--cap", a.cap, "Enumeration cap for brute_force")->capture_default_str();
  cmd->add_option("--threads", a.threads, "Worker threads")->capture_default_str();
  cmd->add_flag("--no-timing", a.no_timing, "Write 0 for all times so output is byte-stable");
  cmd->add_option("--csv", a.csv, "CSV output (default stdout)");
  cmd->add_option("--summary", a.summary, "Summary output (default stderr)");
}

int run_bench(const BenchArgs& a) {
  ExperimentConfig config;
  for (const std::string& name : a.algorithms) config.algorithms.push_back(parse_algorithm(name));
  const bool randomized =
      std::any_of(config.algorithms.begin(), config.algorithms.end(), [](Algorithm x) { return is_randomized(x); });
  if (randomized && a.seeds.empty()) throw UsageError("--seed is required for randomized algorithms");
  if (!a.seeds.empty()) config.seeds = a.seeds;
  config.branch_exchange_start = parse_algorithm(a.start);
  config.budget.time_limit_s = a.time_limit;
  config.enumeration_cap = a.cap;
  config.threads = a.threads;
  config.record_timing = !a.no_timing;

  for (const std::string& file : a.files) {
    BenchInstance instance{file, "file", 0.0, load_valid(file), std::nullopt};
    if (a.shape.given() && is_grid_subgraph(instance.net, a.shape.rows, a.shape.cols) && instance.net.root() == 0)
      instance.grid = std::pair{a.shape.rows, a.shape.cols};
    config.instances.push_back(std::move(instance));
  }
  if (!a.ps.empty()) {
    if (!a.shape.given()) throw UsageError("generated grids need --rows and --cols");
    std::uint64_t seed = a.instance_seed;
    for (double p : a.ps) {
      for (std::size_t i = 0; i < a.count; ++i, ++seed) {
        GeneratorSpec spec;
        spec.rows = a.shape.rows;
        spec.cols = a.shape.cols;
        spec.p = p;
        spec.seed = seed;
        std::ostringstream id;
        id << "grid" << a.shape.rows << "x" << a.shape.cols << "_p" << p << "_s" << seed;
        config.instances.push_back({id.str(), "sparsified_grid", p, generate(spec), std::pair{a.shape.rows, a.shape.cols}});
      }
    }
  }
  if (config.instances.empty()) throw UsageError("no instances: pass --instance or --p with --rows/--cols");

  const auto records = run_benchmark(config);
  emit(results_csv(records), a.csv);
  const std::string summary = summary_text(summarize(records));
  if (a.summary.empty()) std::cerr << summary;
  else emit(summary, a.summary);
  return kOk;
}

// ---------------------------------------------------------------- export-lp

struct ExportArgs {
  std::string instance;
  std::string out;
};

void setup_export(CLI::App& app, ExportArgs& a) {
  auto* cmd = app.add_subcommand("export-lp", "Write the mixed-integer quadratic model in LP format");
  cmd->add_option("-i,--instance", a.instance, "Instance JSON")->required();
  cmd->add_option("-o,--out", a.out, "Output .lp file (default stdout)");
}

int run_export(const ExportArgs& a) {
  const Network net = load_valid(a.instance);
  if (a.out.empty() || a.out == "-") std::cout << martin_lp_text(net);
  else export_martin_lp(net, a.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning-tree reconfiguration of electrical networks"};
  app.require_subcommand(1);
  GenArgs gen;
  SolveArgs solve;
  BoundsArgs bounds;
  BenchArgs bench;
  ExportArgs lp;
  setup_gen(app, gen);
  setup_solve(app, solve);
  setup_bounds(app, bounds);
  setup_bench(app, bench);
  setup_export(app, lp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (app.got_subcommand("gen")) return run_gen(gen);
    if (app.got_subcommand("solve")) return run_solve(solve);
    if (app.got_subcommand("bounds")) return run_bounds(bounds);
    if (app.got_subcommand("bench")) return run_bench(bench);
    if (app.got_subcommand("export-lp")) return run_export(lp);
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const CountOverflow& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
