#include "netreconf/instances.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "netreconf/bounds.hpp"
#include "netreconf/grid.hpp"
#include "netreconf/random.hpp"

namespace netreconf {

namespace {

constexpr std::array<std::pair<InstanceKind, std::string_view>, 6> kKindNames{{
    {InstanceKind::sparsified_grid, "sparsified_grid"},
    {InstanceKind::parallel_paths, "parallel_paths"},
    {InstanceKind::grid_single_demand, "grid_single_demand"},
    {InstanceKind::cycle_opposite, "cycle_opposite"},
    {InstanceKind::triplets, "triplets"},
    {InstanceKind::full_grid_uniform, "full_grid_uniform"},
}};

bool still_connected(std::size_t n, const std::vector<Edge>& edges, const std::vector<char>& alive, EdgeId skip) {
  std::vector<std::vector<std::pair<NodeId, EdgeId>>> adj(n);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (!alive[e] || e == skip) continue;
    adj[edges[e].tail].push_back({edges[e].head, e});
    adj[edges[e].head].push_back({edges[e].tail, e});
  }
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{edges[skip].tail};
  seen[edges[skip].tail] = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (u == edges[skip].head) return true;
    for (const auto& [v, e] : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

Network unit_network(std::size_t n, std::vector<std::pair<NodeId, NodeId>> pairs, std::vector<double> demands) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
  return Network(n, 0, std::move(edges), std::move(demands));
}

}  // namespace

std::string_view to_string(InstanceKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

InstanceKind parse_instance_kind(std::string_view name) {
  for (const auto& [k, text] : kKindNames)
    if (text == name) return k;
  throw std::invalid_argument("unknown instance kind: " + std::string(name));
}

Network gen_sparsified_grid(const GeneratorSpec& spec) {
  if (spec.rows == 0 || spec.cols == 0) throw std::invalid_argument("grid dimensions must be positive");
  if (!(spec.p >= 0.0 && spec.p < 1.0)) throw std::invalid_argument("sparsification probability must lie in [0, 1)");
  if (!(spec.demand_min > 0.0 && spec.demand_min <= spec.demand_max))
    throw std::invalid_argument("demand range must satisfy 0 < min <= max");
  if (!(spec.resistance_min > 0.0 && spec.resistance_min <= spec.resistance_max))
    throw std::invalid_argument("resistance range must satisfy 0 < min <= max");

  Rng rng(spec.seed);
  const std::size_t n = spec.rows * spec.cols;
  std::vector<Edge> edges = grid_edges(spec.rows, spec.cols);
  for (Edge& e : edges) e.resistance = rng.uniform(spec.resistance_min, spec.resistance_max);
  std::vector<double> demands(n);
  for (double& d : demands) d = rng.uniform(spec.demand_min, spec.demand_max);

  std::vector<EdgeId> order(edges.size());
  std::iota(order.begin(), order.end(), EdgeId{0});
  rng.shuffle(std::span<EdgeId>(order));
  std::vector<char> alive(edges.size(), 1);
  for (EdgeId e : order) {
    if (rng.bernoulli(spec.p) && still_connected(n, edges, alive, e)) alive[e] = 0;
  }
  std::vector<Edge> kept;
  for (EdgeId e = 0; e < edges.size(); ++e)
    if (alive[e]) kept.push_back(edges[e]);
  return Network(n, 0, std::move(kept), std::move(demands));
}

RootedTree triplets_alternative_tree(const Network& net, std::size_t k) {
  if (k < 3 || net.node_count() != 3 * k + 2) throw std::invalid_argument("not a triplets instance with k >= 3");
  const auto hub = static_cast<NodeId>(3 * k + 1);
  auto find = [&](NodeId u, NodeId v) {
    for (const Incidence& inc : net.incident(u))
      if (inc.neighbor == v) return inc.edge;
    throw std::invalid_argument("triplets instance is missing an edge");
  };
  std::vector<EdgeId> edges{find(0, hub)};
  for (std::size_t j = 1; j <= k; ++j) {
    const auto y = static_cast<NodeId>(3 * j - 2);
    edges.push_back(find(0, y));
    edges.push_back(find(y, y + 1));
    if (j <= 3) edges.push_back(find(y + 2, hub));
    else edges.push_back(find(y + 1, y + 2));
  }
  return RootedTree::from_edges(net, edges);
}

Network gen_pathological(const GeneratorSpec& spec) {
  const std::size_t k = spec.size;
  switch (spec.kind) {
    case InstanceKind::parallel_paths: {
      if (k < 1) throw std::invalid_argument("parallel_paths needs at least one path");
      std::vector<std::pair<NodeId, NodeId>> pairs;
      for (std::size_t i = 0; i < k; ++i) {
        const auto mid = static_cast<NodeId>(2 + i);
        pairs.push_back({0, mid});
        pairs.push_back({mid, 1});
      }
      std::vector<double> demands(k + 2, 0.0);
      demands[1] = 1.0;
      return unit_network(k + 2, std::move(pairs), std::move(demands));
    }
    case InstanceKind::grid_single_demand: {
      if (k < 2) throw std::invalid_argument("grid_single_demand needs side length >= 2");
      std::vector<double> demands(k * k, 0.0);
      demands.back() = 1.0;
      return Network(k * k, 0, grid_edges(k, k), std::move(demands));
    }
    case InstanceKind::cycle_opposite: {
      if (k < 4 || k % 2 != 0) throw std::invalid_argument("cycle_opposite needs an even length >= 4");
      std::vector<std::pair<NodeId, NodeId>> pairs;
      for (std::size_t i = 0; i < k; ++i)
        pairs.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % k)});
      std::vector<double> demands(k, 0.0);
      demands[k / 2] = 1.0;
      return unit_network(k, std::move(pairs), std::move(demands));
    }
    case InstanceKind::triplets: {
      if (k < 3) throw std::invalid_argument("triplets needs at least three triplets");
      const auto hub = static_cast<NodeId>(3 * k + 1);
      std::vector<std::pair<NodeId, NodeId>> pairs{{0, hub}};
      for (std::size_t j = 1; j <= k; ++j) {
        const auto y = static_cast<NodeId>(3 * j - 2);
        pairs.push_back({0, y});
        pairs.push_back({y, y + 1});
        pairs.push_back({y + 1, y + 2});
        pairs.push_back({y + 2, hub});
      }
      Network net = unit_network(3 * k + 2, std::move(pairs), std::vector<double>(3 * k + 2, 1.0));
      const double kk = static_cast<double>(k);
      const double spt = tree_energy(net, shortest_path_tree(net));
      const double alt = tree_energy(net, triplets_alternative_tree(net, k));
      if (spt != kk * kk + 8 * kk + 1 || alt != 14 * kk - 8)
        throw std::logic_error("triplets construction does not reproduce its cost identities");
      return net;
    }
    case InstanceKind::full_grid_uniform: {
      if (spec.rows == 0 || spec.cols == 0) throw std::invalid_argument("grid dimensions must be positive");
      return Network(spec.rows * spec.cols, 0, grid_edges(spec.rows, spec.cols),
                     std::vector<double>(spec.rows * spec.cols, 1.0));
    }
    case InstanceKind::sparsified_grid:
      break;
  }
  throw std::invalid_argument("not a pathological family");
}

Network generate(const GeneratorSpec& spec) {
  return spec.kind == InstanceKind::sparsified_grid ? gen_sparsified_grid(spec) : gen_pathological(spec);
}

}  // namespace netreconf
