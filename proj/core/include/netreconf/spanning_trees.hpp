#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "netreconf/network.hpp"

namespace netreconf {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Number of spanning trees: determinant of the unweighted Laplacian with the
/// root row and column removed (parallel edges count separately), by
/// fraction-free elimination in exact integers. Throws CountOverflow with a
/// floating-point estimate when the value does not fit.
std::uint64_t kirchhoff_count(const Network& net);

/// Calls `visit` once per spanning tree with its edges in increasing order.
/// Branches on the highest-index undecided edge first, including it before
/// excluding it. `visit` returns false to stop early.
/// Throws EnumerationCapExceeded if the tree count exceeds `cap`.
/// Returns the number of trees visited.
std::uint64_t for_each_spanning_tree(const Network& net,
                                     const std::function<bool(std::span<const EdgeId>)>& visit,
                                     std::uint64_t cap = kDefaultEnumerationCap);

struct OptimumTree {
  RootedTree tree;
  double energy = 0.0;
};

/// Exact minimum-energy spanning tree; the first tree in enumeration order
/// wins ties.
OptimumTree brute_force_opt(const Network& net, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace netreconf
