#pragma once

// Reference computations for tests. Each one takes a route different from
// the library: dense inverses instead of eigendecompositions, path sums
// instead of subtree accumulation, exhaustive subsets instead of recursion.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netreconf/network.hpp"

namespace oracle {

using netreconf::EdgeId;
using netreconf::Network;
using netreconf::NodeId;

/// L^+ = (L + J/n)^{-1} - J/n for the subgraph on the edges with keep[e] set.
Eigen::MatrixXd pseudoinverse(const Network& net, const std::vector<char>& keep);
Eigen::MatrixXd pseudoinverse(const Network& net);

/// Minimum flow energy by a grounded solve at the root, on the kept edges.
double flow_energy(const Network& net, const std::vector<char>& keep);
double flow_energy(const Network& net);

/// Energy of the tree flow: every node's demand is pushed along its tree path to the root.
double tree_energy(const Network& net, std::span<const EdgeId> tree);

/// Signed tree flow on each edge (tail -> head), via the same path walk.
std::vector<double> tree_flow(const Network& net, std::span<const EdgeId> tree);

bool spans(const Network& net, std::span<const EdgeId> edges);

/// Every (n-1)-subset of edges that spans. Only for tiny graphs.
std::vector<std::vector<EdgeId>> all_spanning_trees(const Network& net);

/// Spanning tree count as a floating-point determinant.
double kirchhoff_estimate(const Network& net);

/// Minimum over all assignments (one option per child) of the maximum deviation.
/// options[j] lists the deviations available to child j.
double minimax_assignment(const std::vector<std::vector<double>>& options);

}  // namespace oracle
