#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "netreconf/bounds.hpp"
#include "netreconf/grid.hpp"
#include "netreconf/instances.hpp"
#include "oracles.hpp"

using namespace netreconf;

TEST(InstanceKind, NamesRoundTrip) {
  for (auto kind : {InstanceKind::sparsified_grid, InstanceKind::parallel_paths, InstanceKind::grid_single_demand,
                    InstanceKind::cycle_opposite, InstanceKind::triplets, InstanceKind::full_grid_uniform})
    EXPECT_EQ(parse_instance_kind(to_string(kind)), kind);
  EXPECT_THROW(parse_instance_kind("torus"), std::invalid_argument);
}

TEST(SparsifiedGrid, SameSeedSameInstance) {
  const Network a = fixtures::sparsified(6, 6, 0.3, 42);
  const Network b = fixtures::sparsified(6, 6, 0.3, 42);
  ASSERT_EQ(a.edge_count(), b.edge_count());
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    EXPECT_EQ(a.edge(e).tail, b.edge(e).tail);
    EXPECT_EQ(a.edge(e).resistance, b.edge(e).resistance);
  }
  for (NodeId v = 0; v < a.node_count(); ++v) EXPECT_EQ(a.demand(v), b.demand(v));
}

TEST(SparsifiedGrid, ValidConnectedAndInRange) {
  for (double p : {0.0, 0.3, 0.6, 0.99}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Network net = fixtures::sparsified(7, 5, p, seed);
      EXPECT_TRUE(validate_network(net).ok());
      EXPECT_TRUE(is_grid_subgraph(net, 7, 5));
      for (const Edge& e : net.edges()) {
        EXPECT_GE(e.resistance, 1.0);
        EXPECT_LE(e.resistance, 10.0);
      }
      for (NodeId v = 1; v < net.node_count(); ++v) {
        EXPECT_GE(net.demand(v), 0.5);
        EXPECT_LE(net.demand(v), 1.5);
      }
      if (p == 0.0) EXPECT_EQ(net.edge_count(), grid_edges(7, 5).size());
    }
  }
}

TEST(SparsifiedGrid, RejectsBadSpec) {
  GeneratorSpec spec;
  spec.rows = 0;
  spec.cols = 3;
  EXPECT_THROW(generate(spec), std::invalid_argument);
  spec.rows = 3;
  spec.p = 1.0;
  EXPECT_THROW(generate(spec), std::invalid_argument);
  spec.p = -0.1;
  EXPECT_THROW(generate(spec), std::invalid_argument);
}

TEST(Pathological, ShapesAndDemands) {
  const Network pp = fixtures::family(InstanceKind::parallel_paths, 5);
  EXPECT_EQ(pp.node_count(), 7u);
  EXPECT_EQ(pp.edge_count(), 10u);
  EXPECT_EQ(pp.total_demand(), 1.0);

  const Network grid = fixtures::family(InstanceKind::grid_single_demand, 4);
  EXPECT_EQ(grid.node_count(), 16u);
  EXPECT_EQ(grid.demand(15), 1.0);

  const Network cycle = fixtures::family(InstanceKind::cycle_opposite, 8);
  EXPECT_EQ(cycle.edge_count(), 8u);
  EXPECT_EQ(cycle.demand(4), 1.0);
  EXPECT_THROW(fixtures::family(InstanceKind::cycle_opposite, 7), std::invalid_argument);
}

TEST(Pathological, CycleOppositeEnergies) {
  for (std::size_t n : {4, 8, 12}) {
    const Network net = fixtures::family(InstanceKind::cycle_opposite, n);
    EXPECT_NEAR(flow_relaxation_bound(net), static_cast<double>(n) / 4.0, 1e-9);
    const auto opt = oracle::all_spanning_trees(net);
    for (const auto& tree : opt) EXPECT_NEAR(oracle::tree_energy(net, tree), static_cast<double>(n) / 2.0, 1e-12);
  }
}

TEST(Triplets, CostIdentities) {
  for (std::size_t k = 3; k <= 10; ++k) {
    const Network net = fixtures::family(InstanceKind::triplets, k);
    EXPECT_EQ(net.node_count(), 3 * k + 2);
    EXPECT_EQ(net.edge_count(), 4 * k + 1);
    const double kk = static_cast<double>(k);
    EXPECT_DOUBLE_EQ(oracle::tree_energy(net, shortest_path_tree(net).edges()), kk * kk + 8 * kk + 1);
    EXPECT_DOUBLE_EQ(oracle::tree_energy(net, triplets_alternative_tree(net, k).edges()), 14 * kk - 8);
  }
}

TEST(FullGridUniform, UnitEverything) {
  const Network net = fixtures::full_grid(3, 5);
  EXPECT_EQ(net.total_demand(), 14.0);
  for (const Edge& e : net.edges()) EXPECT_EQ(e.resistance, 1.0);
}
