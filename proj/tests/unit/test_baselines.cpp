#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "netreconf/baselines.hpp"
#include "netreconf/bounds.hpp"
#include "oracles.hpp"

using namespace netreconf;

namespace {

RootedTree path_tree_on_cycle4(const Network& net) { return RootedTree::from_edges(net, std::vector<EdgeId>{0, 1, 2}); }

// No single edge swap lowers the energy by more than `slack`.
void expect_local_optimum(const Network& net, const RootedTree& tree, double slack) {
  const double energy = oracle::tree_energy(net, tree.edges());
  for (EdgeId add = 0; add < net.edge_count(); ++add) {
    if (tree.contains(add)) continue;
    for (EdgeId drop : tree.edges()) {
      std::vector<EdgeId> swapped;
      for (EdgeId e : tree.edges())
        if (e != drop) swapped.push_back(e);
      swapped.push_back(add);
      if (!oracle::spans(net, swapped)) continue;
      EXPECT_GE(oracle::tree_energy(net, swapped), energy - slack) << "add " << add << " drop " << drop;
    }
  }
}

}  // namespace

TEST(DfsTree, SpanningAndSeeded) {
  const Network net = fixtures::sparsified(6, 6, 0.2, 1);
  const auto a = dfs_tree(net, 4);
  EXPECT_TRUE(is_spanning_tree(net, a.edges()));
  EXPECT_TRUE(a == dfs_tree(net, 4));
  bool differs = false;
  for (std::uint64_t s = 0; s < 10 && !differs; ++s) differs = !(dfs_tree(net, s) == a);
  EXPECT_TRUE(differs);
}

TEST(DfsTree, CycleGivesHamiltonianPath) {
  const Network net = fixtures::cycle4();
  const auto tree = dfs_tree(net, 0);
  std::size_t deepest = 0;
  for (NodeId v = 0; v < 4; ++v) deepest = std::max(deepest, tree.depth(v));
  EXPECT_EQ(deepest, 3u);
}

TEST(BranchExchange, FourCyclePathImprovesToOptimum) {
  const Network net = fixtures::cycle4();
  const auto result = branch_exchange(net, path_tree_on_cycle4(net));
  ASSERT_FALSE(result.history.empty());
  EXPECT_DOUBLE_EQ(result.history.front(), 14.0);
  EXPECT_DOUBLE_EQ(result.energy, 6.0);
  EXPECT_EQ(result.moves, 1u);
  EXPECT_TRUE(result.local_optimum);
}

TEST(BranchExchange, HistoryDecreasesAndEndsLocallyOptimal) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Network net = fixtures::sparsified(5, 5, 0.2, seed);
    for (auto rule : {ExchangeRule::first_improvement, ExchangeRule::threshold_halving}) {
      const auto result = branch_exchange(net, dfs_tree(net, seed), {}, rule);
      for (std::size_t i = 1; i < result.history.size(); ++i) EXPECT_LT(result.history[i], result.history[i - 1]);
      EXPECT_EQ(result.history.size(), result.moves + 1);
      EXPECT_NEAR(result.energy, oracle::tree_energy(net, result.tree.edges()), 1e-9 * result.energy);
      EXPECT_TRUE(result.local_optimum);
      expect_local_optimum(net, result.tree, 1e-9 * result.energy);
      EXPECT_GE(result.energy, flow_relaxation_bound(net) * (1 - 1e-12));
    }
  }
}

TEST(BranchExchange, IterationBudgetStopsEarly) {
  const Network net = fixtures::sparsified(6, 6, 0.1, 2);
  LocalSearchBudget budget;
  budget.max_iterations = 2;
  const auto result = branch_exchange(net, dfs_tree(net, 1), budget);
  EXPECT_LE(result.moves, 2u);
  EXPECT_FALSE(result.local_optimum);
}

TEST(BranchExchange, TargetEnergyRecordsTime) {
  const Network net = fixtures::sparsified(6, 6, 0.1, 3);
  const auto full = branch_exchange(net, dfs_tree(net, 2));
  LocalSearchBudget budget;
  budget.target_energy = full.history[full.history.size() / 2];
  const auto partial = branch_exchange(net, dfs_tree(net, 2), budget);
  ASSERT_TRUE(partial.seconds_to_target.has_value());
  EXPECT_LE(partial.energy, *budget.target_energy);
  EXPECT_LE(partial.moves, full.moves);

  budget.target_energy = 0.0;
  EXPECT_FALSE(branch_exchange(net, dfs_tree(net, 2), budget).seconds_to_target.has_value());
}

TEST(BranchExchange, LargeThresholdBlocksMoves) {
  const Network net = fixtures::cycle4();
  LocalSearchBudget budget;
  budget.improvement_threshold = 8.0;
  const auto result = branch_exchange(net, path_tree_on_cycle4(net), budget);
  EXPECT_EQ(result.moves, 0u);
  EXPECT_DOUBLE_EQ(result.energy, 14.0);
}
