#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "netreconf/error.hpp"
#include "netreconf/grid.hpp"
#include "netreconf/layered_matching.hpp"
#include "netreconf/random.hpp"
#include "oracles.hpp"

using namespace netreconf;

TEST(BfsLayers, GridLayersAreDiagonals) {
  const Network net = fixtures::full_grid(3, 4);
  const auto layers = bfs_layers(net);
  ASSERT_EQ(layers.layers.size(), 6u);
  EXPECT_TRUE(layers.cross_edges[0].empty());
  const GridView view(net, 3, 4);
  for (NodeId v = 0; v < net.node_count(); ++v) EXPECT_EQ(layers.layer_of[v], view.diagonal_of(v));
  std::size_t crossing = 0;
  for (const auto& c : layers.cross_edges) crossing += c.size();
  EXPECT_EQ(crossing, net.edge_count());
}

TEST(BfsLayers, IntraLayerEdgesAreNotCross) {
  const auto layers = bfs_layers(fixtures::triangle());
  ASSERT_EQ(layers.layers.size(), 2u);
  EXPECT_EQ(layers.cross_edges[1].size(), 2u);
}

TEST(LayerMatching, PicksSmallestDeviationWithTies) {
  LayerProblem problem;
  problem.children = {5, 6};
  problem.demand = {1.0, 2.0};
  problem.candidates = {
      {3, 0, 10, 0.5},  // |1 - 0.5| = 0.5
      {2, 0, 11, 1.5},  // 0.5, smaller parent id wins
      {4, 1, 12, 2.25},
      {4, 1, 9, 1.75},  // same parent, smaller edge id wins
  };
  const auto result = layer_matching(problem);
  EXPECT_EQ(result.choice, (std::vector<std::size_t>{1, 3}));
  EXPECT_DOUBLE_EQ(result.epsilon, 0.5);
}

TEST(LayerMatching, ChildWithoutCandidateFails) {
  LayerProblem problem;
  problem.children = {1, 2};
  problem.demand = {1.0, 1.0};
  problem.candidates = {{0, 0, 0, 1.0}};
  EXPECT_THROW(layer_matching(problem), StructuralError);
}

TEST(LayerMatching, EpsilonMatchesMinimaxOracle) {
  netreconf::Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    LayerProblem problem;
    const std::size_t k = 1 + rng.below(5);
    std::vector<std::vector<double>> options(k);
    for (std::size_t j = 0; j < k; ++j) {
      problem.children.push_back(static_cast<NodeId>(10 + j));
      problem.demand.push_back(rng.uniform(0.5, 2.0));
      const std::size_t c = 1 + rng.below(3);
      for (std::size_t i = 0; i < c; ++i) {
        const double flow = rng.uniform(-1.0, 3.0);
        problem.candidates.push_back({static_cast<NodeId>(rng.below(4)), j, static_cast<EdgeId>(problem.candidates.size()), flow});
        options[j].push_back(std::abs(problem.demand[j] - flow));
      }
    }
    EXPECT_NEAR(layer_matching(problem).epsilon, oracle::minimax_assignment(options), 1e-15);
  }
}

TEST(LmHeuristic, TreeInputIsReturned) {
  const Network net = fixtures::path3();
  const auto result = lm_heuristic(net);
  EXPECT_EQ(result.tree.edges().size(), 2u);
  EXPECT_EQ(result.epsilon.size(), 3u);
}

TEST(LmHeuristic, ParallelPathsEnergy) {
  const Network net = fixtures::family(InstanceKind::parallel_paths, 3);
  const auto result = lm_heuristic(net);
  EXPECT_DOUBLE_EQ(tree_energy(net, result.tree), 2.0);
}

TEST(LmHeuristic, FourCycleFindsOptimum) {
  const Network net = fixtures::cycle4();
  EXPECT_DOUBLE_EQ(tree_energy(net, lm_heuristic(net).tree), 6.0);
}

TEST(LmHeuristic, SpanningTreesOnSparseGrids) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Network net = fixtures::sparsified(6, 6, 0.3, seed);
    for (bool fixed : {false, true}) {
      LmOptions options;
      options.static_relaxation = fixed;
      std::size_t calls = 0;
      const auto result = lm_heuristic(net, options, [&](std::size_t layer, const LayerProblem& problem,
                                                         const MatchingResult& matching) {
        ++calls;
        EXPECT_GE(layer, 1u);
        EXPECT_EQ(matching.choice.size(), problem.children.size());
      });
      EXPECT_TRUE(is_spanning_tree(net, result.tree.edges()));
      EXPECT_EQ(calls + 1, bfs_layers(net).layers.size());
      // BFS layering makes every tree edge join consecutive layers.
      const auto layers = bfs_layers(net);
      for (NodeId v = 0; v < net.node_count(); ++v)
        if (v != net.root()) EXPECT_EQ(layers.layer_of[result.tree.parent(v)] + 1, layers.layer_of[v]);
    }
  }
}

TEST(LmHeuristic, ObservedEpsilonEqualsRecorded) {
  const Network net = fixtures::sparsified(5, 5, 0.2, 12);
  std::vector<double> seen(bfs_layers(net).layers.size(), -1.0);
  const auto result = lm_heuristic(net, {}, [&](std::size_t layer, const LayerProblem&, const MatchingResult& m) {
    seen[layer] = m.epsilon;
  });
  for (std::size_t k = 1; k < seen.size(); ++k) EXPECT_EQ(seen[k], result.epsilon[k]);
}
