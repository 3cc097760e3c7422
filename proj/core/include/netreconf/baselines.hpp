#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "netreconf/network.hpp"

namespace netreconf {

/// Depth-first tree from the root; each node's neighbours are visited in a
/// seeded random order.
RootedTree dfs_tree(const Network& net, std::uint64_t seed);

struct LocalSearchBudget {
  std::size_t max_iterations = std::numeric_limits<std::size_t>::max();  ///< accepted moves
  double time_limit_s = std::numeric_limits<double>::infinity();
  /// A move is accepted only if it lowers the energy by more than this.
  double improvement_threshold = 0.0;
  /// Stop as soon as the energy is at most this value.
  std::optional<double> target_energy;
};

enum class ExchangeRule {
  /// Scan non-tree edges in index order; apply the best removal for the first
  /// added edge that improves, then restart the scan.
  first_improvement,
  /// Same scan, but only moves improving by at least T are taken; T starts at
  /// half the energy and is halved whenever a full scan finds nothing.
  threshold_halving,
};

struct BranchExchangeResult {
  RootedTree tree;
  double energy = 0.0;
  /// Energy before the first move and after every accepted move.
  std::vector<double> history;
  std::size_t moves = 0;
  bool local_optimum = false;
  double seconds = 0.0;
  /// Wall time at which the energy first reached budget.target_energy.
  std::optional<double> seconds_to_target;
};

BranchExchangeResult branch_exchange(const Network& net, const RootedTree& start,
                                     const LocalSearchBudget& budget = {},
                                     ExchangeRule rule = ExchangeRule::first_improvement);

}  // namespace netreconf
