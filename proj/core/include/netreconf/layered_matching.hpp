#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "netreconf/network.hpp"

namespace netreconf {

/// Hop-distance layers from the root. cross_edges[k] lists the edges joining
/// layers k-1 and k (cross_edges[0] is empty).
struct LayerPartition {
  std::vector<std::vector<NodeId>> layers;
  std::vector<std::size_t> layer_of;
  std::vector<std::vector<EdgeId>> cross_edges;
};

LayerPartition bfs_layers(const Network& net);

/// A possible parent edge for a child: `flow` is the relaxed flow on the edge
/// in the parent -> child direction (negative if it runs the other way).
struct MatchingCandidate {
  NodeId parent = kNoNode;
  std::size_t child = 0;  ///< index into LayerProblem::children
  EdgeId edge = kNoEdge;
  double flow = 0.0;
};

struct LayerProblem {
  std::vector<NodeId> children;
  std::vector<double> demand;  ///< per child
  std::vector<MatchingCandidate> candidates;
};

struct MatchingResult {
  std::vector<std::size_t> choice;  ///< per child, index into candidates
  double epsilon = 0.0;
};

/// Min-max deviation assignment: every child takes the candidate minimizing
/// |demand - flow| (ties: smaller parent id, then smaller edge id); epsilon is
/// the largest of these minima. Throws StructuralError for a child without
/// candidates.
MatchingResult layer_matching(const LayerProblem& problem);

struct LmOptions {
  /// Compute the relaxed flow once on the original graph instead of on the
  /// contracted graph before every layer.
  bool static_relaxation = false;
};

using LmObserver = std::function<void(std::size_t layer, const LayerProblem&, const MatchingResult&)>;

struct LmResult {
  RootedTree tree;
  /// epsilon per layer, indexed by layer number (entry 0 unused).
  std::vector<double> epsilon;
};

/// Layered matching: layers are matched deepest first; each matched child
/// subtree is contracted into its parent with the summed demand.
LmResult lm_heuristic(const Network& net, const LmOptions& options = {}, const LmObserver& observer = {});

}  // namespace netreconf
