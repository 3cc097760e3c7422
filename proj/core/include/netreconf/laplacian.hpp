#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netreconf/network.hpp"

namespace netreconf {

/// Edge e is treated as a bridge when 1 - c_e Reff(e) <= kBridgeTolerance * max(1, c_e r_e).
inline constexpr double kBridgeTolerance = 1e-9;

/// Dense weighted Laplacian L = B C B^T of the currently active edges together
/// with its Moore-Penrose pseudoinverse, maintained under edge deletions by
/// rank-one updates.
///
/// Every `refresh_interval` deletions the pseudoinverse is recomputed from L
/// to bound floating-point drift. Intended for n up to a few thousand nodes.
class LaplacianState {
 public:
  static constexpr std::size_t kDefaultRefreshInterval = 50;

  /// Throws NumericalError if the graph is disconnected (nullspace of L has
  /// dimension > 1).
  explicit LaplacianState(const Network& net, std::size_t refresh_interval = kDefaultRefreshInterval);

  std::size_t node_count() const { return static_cast<std::size_t>(laplacian_.rows()); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t active_edge_count() const { return active_count_; }
  bool is_active(EdgeId e) const { return active_[e] != 0; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::vector<EdgeId> active_edges() const;

  const Eigen::MatrixXd& laplacian() const { return laplacian_; }
  const Eigen::MatrixXd& pseudoinverse() const { return pinv_; }

  std::size_t refresh_interval() const { return refresh_interval_; }
  std::size_t deletions_since_refresh() const { return deletions_since_refresh_; }

  /// chi_uv^T L^+ chi_uv. Throws std::invalid_argument when u == v.
  double effective_resistance(NodeId u, NodeId v) const;
  double edge_effective_resistance(EdgeId e) const;

  /// 1 - c_e Reff(e): the probability that e is *not* in a conductance-weighted
  /// random spanning tree. Zero exactly for bridges.
  double deletion_slack(EdgeId e) const;
  bool is_bridge(EdgeId e) const;

  /// Removes an active non-bridge edge using the rank-one pseudoinverse update
  ///   L'^+ = L^+ + (L^+ chi_e c_e chi_e^T L^+) / (1 - c_e chi_e^T L^+ chi_e).
  /// Throws NumericalError for bridges and std::invalid_argument for inactive edges.
  void delete_edge(EdgeId e);

  /// Recompute L^+ from L (symmetric eigendecomposition, null vector deflated).
  void refresh();

  /// Pseudoinverse of an arbitrary connected Laplacian.
  static Eigen::MatrixXd pseudoinverse_of(const Eigen::MatrixXd& laplacian);

 private:
  std::vector<Edge> edges_;
  std::vector<char> active_;
  std::size_t active_count_ = 0;
  Eigen::MatrixXd laplacian_;
  Eigen::MatrixXd pinv_;
  std::size_t refresh_interval_;
  std::size_t deletions_since_refresh_ = 0;
};

inline LaplacianState build_laplacian(const Network& net,
                                      std::size_t refresh_interval = LaplacianState::kDefaultRefreshInterval) {
  return LaplacianState(net, refresh_interval);
}

/// Node potentials phi = L^+ b. Throws NumericalError if sum(b) deviates from 0 by more than 1e-9.
Eigen::VectorXd potentials(const LaplacianState& state, std::span<const double> b);

/// Electrical flow for demand vector b: phi = L^+ b and, on every active edge,
/// f = (phi_head - phi_tail) / r (Ohm's law). Inactive edges carry 0.
FlowAssignment electrical_flow(const LaplacianState& state, std::span<const double> b);
FlowAssignment electrical_flow(const LaplacianState& state, const Network& net);

/// b^T L^+ b, the minimum energy of any flow meeting the demands.
double flow_energy(const LaplacianState& state, std::span<const double> b);
double flow_energy(const LaplacianState& state, const Network& net);

/// Energy of the electrical flow after deleting non-bridge e, predicted without
/// modifying the state: E + r_e f(e)^2 / (1 - c_e Reff(e)).
double energy_after_deletion(const LaplacianState& state, std::span<const double> b, EdgeId e);
double energy_after_deletion(const LaplacianState& state, const Network& net, EdgeId e);

/// Electrical potentials on a (multi)graph given as an edge list, by a sparse
/// Cholesky solve of the Laplacian grounded at `ground` (phi[ground] = 0).
/// Parallel edges add their conductances. Used where only one solve is needed.
std::vector<double> grounded_potentials(std::size_t node_count, std::span<const Edge> edges,
                                        std::span<const double> b, NodeId ground);

}  // namespace netreconf
