#include <benchmark/benchmark.h>

#include "netreconf/baselines.hpp"
#include "netreconf/instances.hpp"
#include "netreconf/laplacian.hpp"
#include "netreconf/layered_matching.hpp"
#include "netreconf/ride.hpp"

namespace {

netreconf::Network grid(std::size_t side, double p) {
  netreconf::GeneratorSpec spec;
  spec.rows = side;
  spec.cols = side;
  spec.p = p;
  spec.seed = 7;
  return netreconf::generate(spec);
}

void BM_BuildLaplacian(benchmark::State& state) {
  const auto net = grid(static_cast<std::size_t>(state.range(0)), 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(netreconf::build_laplacian(net));
}
BENCHMARK(BM_BuildLaplacian)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMicrosecond);

void BM_DeleteEdge(benchmark::State& state) {
  const auto net = grid(static_cast<std::size_t>(state.range(0)), 0.0);
  const auto base = netreconf::build_laplacian(net);
  for (auto _ : state) {
    state.PauseTiming();
    auto copy = base;
    state.ResumeTiming();
    copy.delete_edge(0);
    benchmark::DoNotOptimize(copy.pseudoinverse().data());
  }
}
BENCHMARK(BM_DeleteEdge)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMicrosecond);

void BM_Ride(benchmark::State& state) {
  const auto net = grid(static_cast<std::size_t>(state.range(0)), 0.1);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(netreconf::ride(net, ++seed).tree);
}
BENCHMARK(BM_Ride)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Lm(benchmark::State& state) {
  const auto net = grid(static_cast<std::size_t>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(netreconf::lm_heuristic(net).tree);
}
BENCHMARK(BM_Lm)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_BranchExchange(benchmark::State& state) {
  const auto net = grid(static_cast<std::size_t>(state.range(0)), 0.1);
  const auto start = netreconf::dfs_tree(net, 1);
  for (auto _ : state) benchmark::DoNotOptimize(netreconf::branch_exchange(net, start).energy);
}
BENCHMARK(BM_BranchExchange)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
