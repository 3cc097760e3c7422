#pragma once

#include <utility>
#include <vector>

#include "netreconf/grid.hpp"
#include "netreconf/instances.hpp"
#include "netreconf/network.hpp"

namespace fixtures {

using netreconf::Edge;
using netreconf::Network;
using netreconf::NodeId;

inline Network unit_graph(std::size_t n, std::vector<std::pair<NodeId, NodeId>> pairs, std::vector<double> demands) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
  return Network(n, 0, std::move(edges), std::move(demands));
}

/// r=0 - a=1 - b=2 with d_a = 1, d_b = 2.
inline Network path3() { return unit_graph(3, {{0, 1}, {1, 2}}, {0, 1, 2}); }

/// r=0, a=1, b=2, c=3 around the cycle, unit demands.
inline Network cycle4() { return unit_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 1, 1, 1}); }

inline Network triangle() { return unit_graph(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 1}); }

inline Network star(std::size_t leaves) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (std::size_t i = 1; i <= leaves; ++i) pairs.push_back({0, static_cast<NodeId>(i)});
  std::vector<double> d(leaves + 1, 1.0);
  return unit_graph(leaves + 1, pairs, d);
}

inline Network full_grid(std::size_t rows, std::size_t cols) {
  netreconf::GeneratorSpec spec;
  spec.kind = netreconf::InstanceKind::full_grid_uniform;
  spec.rows = rows;
  spec.cols = cols;
  return netreconf::generate(spec);
}

inline Network sparsified(std::size_t rows, std::size_t cols, double p, std::uint64_t seed) {
  netreconf::GeneratorSpec spec;
  spec.kind = netreconf::InstanceKind::sparsified_grid;
  spec.rows = rows;
  spec.cols = cols;
  spec.p = p;
  spec.seed = seed;
  return netreconf::generate(spec);
}

inline Network family(netreconf::InstanceKind kind, std::size_t size) {
  netreconf::GeneratorSpec spec;
  spec.kind = kind;
  spec.size = size;
  return netreconf::generate(spec);
}

}  // namespace fixtures
