#include "netreconf/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "netreconf/random.hpp"

namespace netreconf {

RootedTree dfs_tree(const Network& net, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = net.node_count();
  std::vector<char> seen(n, 0);
  std::vector<EdgeId> edges;
  struct Frame {
    NodeId node;
    std::vector<Incidence> order;
    std::size_t next = 0;
  };
  auto enter = [&](NodeId v) {
    seen[v] = 1;
    Frame frame{v, {net.incident(v).begin(), net.incident(v).end()}};
    rng.shuffle(std::span<Incidence>(frame.order));
    return frame;
  };
  std::vector<Frame> stack;
  stack.push_back(enter(net.root()));
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.order.size()) {
      stack.pop_back();
      continue;
    }
    const Incidence inc = top.order[top.next++];
    if (seen[inc.neighbor]) continue;
    edges.push_back(inc.edge);
    stack.push_back(enter(inc.neighbor));
  }
  return RootedTree::from_edges(net, edges);
}

namespace {

using Clock = std::chrono::steady_clock;

struct PathEdge {
  EdgeId edge;
  double below;  // demand of the subtree hanging from this edge
};

struct Candidate {
  double delta = 0.0;
  EdgeId remove = kNoEdge;
};

/// Best removal for adding non-tree edge g. Removing a path edge that detaches
/// demand t changes the energy by t^2 R + 2t (C_other - C_same), where R sums
/// resistances over the cycle and C_side sums r * D over the tree path on
/// each side of the common ancestor.
Candidate best_removal(const Network& net, const RootedTree& tree, const std::vector<double>& below,
                       EdgeId g, std::vector<PathEdge>& side_a, std::vector<PathEdge>& side_b) {
  side_a.clear();
  side_b.clear();
  NodeId x = net.edge(g).tail;
  NodeId y = net.edge(g).head;
  while (x != y) {
    if (tree.depth(x) >= tree.depth(y)) {
      side_a.push_back({tree.parent_edge(x), below[x]});
      x = tree.parent(x);
    } else {
      side_b.push_back({tree.parent_edge(y), below[y]});
      y = tree.parent(y);
    }
  }
  double cycle_r = net.edge(g).resistance;
  double ca = 0.0;
  double cb = 0.0;
  for (const PathEdge& p : side_a) {
    cycle_r += net.edge(p.edge).resistance;
    ca += net.edge(p.edge).resistance * p.below;
  }
  for (const PathEdge& p : side_b) {
    cycle_r += net.edge(p.edge).resistance;
    cb += net.edge(p.edge).resistance * p.below;
  }
  Candidate best;
  auto consider = [&](const PathEdge& p, double other_minus_same) {
    const double t = p.below;
    const double delta = t * t * cycle_r + 2.0 * t * other_minus_same;
    if (best.remove == kNoEdge || delta < best.delta || (delta == best.delta && p.edge < best.remove)) {
      best.delta = delta;
      best.remove = p.edge;
    }
  };
  for (const PathEdge& p : side_a) consider(p, cb - ca);
  for (const PathEdge& p : side_b) consider(p, ca - cb);
  return best;
}

}  // namespace

BranchExchangeResult branch_exchange(const Network& net, const RootedTree& start,
                                     const LocalSearchBudget& budget, ExchangeRule rule) {
  const auto t0 = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };

  BranchExchangeResult result;
  result.tree = start;
  result.energy = tree_energy(net, start);
  result.history.push_back(result.energy);
  std::vector<double> below = subtree_demands(net, result.tree);
  std::vector<char> in_tree(net.edge_count(), 0);
  for (EdgeId e : result.tree.edges()) in_tree[e] = 1;

  auto reached_target = [&] {
    if (!budget.target_energy || result.energy > *budget.target_energy) return false;
    if (!result.seconds_to_target) result.seconds_to_target = elapsed();
    return true;
  };

  std::vector<PathEdge> side_a;
  std::vector<PathEdge> side_b;
  double level = rule == ExchangeRule::threshold_halving ? result.energy / 2.0 : 0.0;
  bool out_of_budget = reached_target();
  while (!out_of_budget) {
    const double floor = std::max(budget.improvement_threshold, 1e-12 * result.energy);
    const double needed = std::max(level, floor);
    bool moved = false;
    for (EdgeId g = 0; g < net.edge_count() && !moved; ++g) {
      if (in_tree[g] || net.edge(g).tail == net.edge(g).head) continue;
      if ((g & 63) == 0 && elapsed() > budget.time_limit_s) {
        out_of_budget = true;
        break;
      }
      const Candidate c = best_removal(net, result.tree, below, g, side_a, side_b);
      if (c.remove == kNoEdge || !(c.delta < -needed)) continue;
      in_tree[c.remove] = 0;
      in_tree[g] = 1;
      std::vector<EdgeId> edges;
      edges.reserve(net.node_count() - 1);
      for (EdgeId e = 0; e < net.edge_count(); ++e)
        if (in_tree[e]) edges.push_back(e);
      result.tree = RootedTree::from_edges(net, edges);
      below = subtree_demands(net, result.tree);
      result.energy = tree_energy(net, result.tree);
      result.history.push_back(result.energy);
      ++result.moves;
      moved = true;
    }
    if (out_of_budget) break;
    if (reached_target() || result.moves >= budget.max_iterations || elapsed() > budget.time_limit_s) break;
    if (!moved) {
      if (level <= floor) {
        result.local_optimum = true;
        break;
      }
      level /= 2.0;
    }
  }
  result.seconds = elapsed();
  return result;
}

}  // namespace netreconf
