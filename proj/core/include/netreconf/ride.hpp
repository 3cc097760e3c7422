#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "netreconf/laplacian.hpp"
#include "netreconf/network.hpp"

namespace netreconf {

struct DeletionRecord {
  EdgeId edge = kNoEdge;
  double probability = 0.0;
  double energy_before = 0.0;
  /// Predicted by the recursion E + r f^2 / (1 - c Reff); the increment is energy_after - energy_before.
  double energy_after = 0.0;
};

struct DeletionTrace {
  std::uint64_t seed = 0;
  std::vector<DeletionRecord> records;
};

struct RideResult {
  RootedTree tree;
  DeletionTrace trace;
};

/// Deletion probabilities for the current graph: (1 - c_e Reff(e)) / (m_k - (n - 1))
/// on active edges, zero on bridges and inactive edges. Negative roundoff is
/// clamped to zero and the vector renormalized to sum to one.
/// Throws StructuralError if the active graph is already a tree.
std::vector<double> ride_probabilities(const LaplacianState& state);

/// Called after every deletion with the updated state.
using RideObserver = std::function<void(const LaplacianState&, const DeletionRecord&)>;

/// Randomized iterative edge deletion: repeatedly samples an edge with the
/// probabilities above and deletes it until n - 1 edges remain. The tree is
/// rooted at net.root() afterwards.
RideResult ride(const Network& net, std::uint64_t seed,
                std::size_t refresh_interval = LaplacianState::kDefaultRefreshInterval,
                const RideObserver& observer = {});

/// Same, starting from a prebuilt state of the full graph (copied), so repeated
/// runs on one instance skip the initial decomposition.
RideResult ride(const Network& net, const LaplacianState& initial, std::uint64_t seed,
                const RideObserver& observer = {});

std::string trace_to_json(const DeletionTrace& trace, int indent = 2);

}  // namespace netreconf
