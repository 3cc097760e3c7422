#include "netreconf/laplacian.hpp"

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "disjoint_sets.hpp"
#include "netreconf/error.hpp"

namespace netreconf {

namespace {

void check_balanced(std::span<const double> b) {
  double sum = 0.0;
  double scale = 1.0;
  for (double x : b) {
    sum += x;
    scale = std::max(scale, std::abs(x));
  }
  if (std::abs(sum) > 1e-9 * scale)
    throw NumericalError("demand vector is unbalanced (sum " + std::to_string(sum) + ")");
}

Eigen::Map<const Eigen::VectorXd> as_vector(std::span<const double> b) {
  return {b.data(), static_cast<Eigen::Index>(b.size())};
}

}  // namespace

LaplacianState::LaplacianState(const Network& net, std::size_t refresh_interval)
    : edges_(net.edges().begin(), net.edges().end()),
      active_(net.edge_count(), 1),
      active_count_(net.edge_count()),
      refresh_interval_(refresh_interval == 0 ? kDefaultRefreshInterval : refresh_interval) {
  const auto n = static_cast<Eigen::Index>(net.node_count());
  laplacian_ = Eigen::MatrixXd::Zero(n, n);
  detail::DisjointSets sets(net.node_count());
  for (const Edge& e : edges_) {
    if (e.tail == e.head) continue;
    const double c = e.conductance();
    laplacian_(e.tail, e.tail) += c;
    laplacian_(e.head, e.head) += c;
    laplacian_(e.tail, e.head) -= c;
    laplacian_(e.head, e.tail) -= c;
    sets.unite(e.tail, e.head);
  }
  if (sets.components() > 1) throw NumericalError("graph is disconnected; Laplacian nullspace exceeds span{1}");
  pinv_ = pseudoinverse_of(laplacian_);
}

Eigen::MatrixXd LaplacianState::pseudoinverse_of(const Eigen::MatrixXd& laplacian) {
  const Eigen::Index n = laplacian.rows();
  if (n <= 1) return Eigen::MatrixXd::Zero(n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const double top = std::max(lambda(n - 1), 1e-300);
  // Eigenvalues come sorted ascending; index 0 spans the constant vector.
  if (lambda(1) <= 1e-12 * top) throw NumericalError("Laplacian has rank below n-1 (disconnected graph)");
  const auto tail = solver.eigenvectors().rightCols(n - 1);
  const Eigen::VectorXd inv = lambda.tail(n - 1).cwiseInverse();
  Eigen::MatrixXd pinv = tail * inv.asDiagonal() * tail.transpose();
  pinv = 0.5 * (pinv + pinv.transpose()).eval();
  // Project out the constant vector so that L^+ 1 = 0 to rounding.
  const Eigen::VectorXd means = pinv.rowwise().mean();
  const double grand = means.mean();
  pinv.colwise() -= means;
  pinv.rowwise() -= means.transpose();
  pinv.array() += grand;
  return pinv;
}

std::vector<EdgeId> LaplacianState::active_edges() const {
  std::vector<EdgeId> out;
  out.reserve(active_count_);
  for (EdgeId e = 0; e < edges_.size(); ++e)
    if (active_[e]) out.push_back(e);
  return out;
}

double LaplacianState::effective_resistance(NodeId u, NodeId v) const {
  if (u == v) throw std::invalid_argument("effective resistance needs distinct endpoints");
  if (u >= node_count() || v >= node_count()) throw std::invalid_argument("node index out of range");
  return pinv_(u, u) + pinv_(v, v) - 2.0 * pinv_(u, v);
}

double LaplacianState::edge_effective_resistance(EdgeId e) const {
  const Edge& edge = edges_.at(e);
  return effective_resistance(edge.tail, edge.head);
}

double LaplacianState::deletion_slack(EdgeId e) const {
  return 1.0 - edges_.at(e).conductance() * edge_effective_resistance(e);
}

bool LaplacianState::is_bridge(EdgeId e) const {
  const Edge& edge = edges_.at(e);
  const double cr = edge.conductance() * edge.resistance;
  return deletion_slack(e) <= kBridgeTolerance * std::max(1.0, cr);
}

void LaplacianState::delete_edge(EdgeId e) {
  if (e >= edges_.size() || !active_[e]) throw std::invalid_argument("edge is not active");
  if (is_bridge(e)) throw NumericalError("deleting edge " + std::to_string(e) + " would disconnect the graph");
  const Edge& edge = edges_[e];
  const double c = edge.conductance();
  const double slack = deletion_slack(e);

  laplacian_(edge.tail, edge.tail) -= c;
  laplacian_(edge.head, edge.head) -= c;
  laplacian_(edge.tail, edge.head) += c;
  laplacian_(edge.head, edge.tail) += c;
  active_[e] = 0;
  --active_count_;

  if (++deletions_since_refresh_ >= refresh_interval_) {
    refresh();
    return;
  }
  const Eigen::VectorXd x = pinv_.col(edge.head) - pinv_.col(edge.tail);
  pinv_.noalias() += (c / slack) * x * x.transpose();
}

void LaplacianState::refresh() {
  pinv_ = pseudoinverse_of(laplacian_);
  deletions_since_refresh_ = 0;
}

Eigen::VectorXd potentials(const LaplacianState& state, std::span<const double> b) {
  if (b.size() != state.node_count()) throw std::invalid_argument("demand vector has wrong length");
  check_balanced(b);
  return state.pseudoinverse() * as_vector(b);
}

FlowAssignment electrical_flow(const LaplacianState& state, std::span<const double> b) {
  const Eigen::VectorXd phi = potentials(state, b);
  FlowAssignment result;
  result.flow.assign(state.edge_count(), 0.0);
  for (EdgeId e = 0; e < state.edge_count(); ++e) {
    if (!state.is_active(e)) continue;
    const Edge& edge = state.edge(e);
    result.flow[e] = (phi(edge.head) - phi(edge.tail)) / edge.resistance;
  }
  result.potentials.emplace(phi.data(), phi.data() + phi.size());
  return result;
}

FlowAssignment electrical_flow(const LaplacianState& state, const Network& net) {
  return electrical_flow(state, net.demand_vector());
}

double flow_energy(const LaplacianState& state, std::span<const double> b) {
  return as_vector(b).dot(potentials(state, b));
}

double flow_energy(const LaplacianState& state, const Network& net) {
  return flow_energy(state, net.demand_vector());
}

double energy_after_deletion(const LaplacianState& state, std::span<const double> b, EdgeId e) {
  if (e >= state.edge_count() || !state.is_active(e)) throw std::invalid_argument("edge is not active");
  if (state.is_bridge(e)) throw NumericalError("edge " + std::to_string(e) + " is a bridge");
  const Eigen::VectorXd phi = potentials(state, b);
  const Edge& edge = state.edge(e);
  const double f = (phi(edge.head) - phi(edge.tail)) / edge.resistance;
  return as_vector(b).dot(phi) + edge.resistance * f * f / state.deletion_slack(e);
}

double energy_after_deletion(const LaplacianState& state, const Network& net, EdgeId e) {
  return energy_after_deletion(state, net.demand_vector(), e);
}

std::vector<double> grounded_potentials(std::size_t node_count, std::span<const Edge> edges,
                                        std::span<const double> b, NodeId ground) {
  if (b.size() != node_count) throw std::invalid_argument("demand vector has wrong length");
  if (ground >= node_count) throw std::invalid_argument("ground node out of range");
  check_balanced(b);
  std::vector<double> phi(node_count, 0.0);
  if (node_count == 1) return phi;

  // Reduced index: skip the ground node.
  auto idx = [ground](NodeId v) { return static_cast<Eigen::Index>(v < ground ? v : v - 1); };
  const auto k = static_cast<Eigen::Index>(node_count - 1);
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(4 * edges.size());
  for (const Edge& e : edges) {
    if (e.tail == e.head) continue;
    const double c = e.conductance();
    if (e.tail != ground) entries.emplace_back(idx(e.tail), idx(e.tail), c);
    if (e.head != ground) entries.emplace_back(idx(e.head), idx(e.head), c);
    if (e.tail != ground && e.head != ground) {
      entries.emplace_back(idx(e.tail), idx(e.head), -c);
      entries.emplace_back(idx(e.head), idx(e.tail), -c);
    }
  }
  Eigen::SparseMatrix<double> reduced(k, k);
  reduced.setFromTriplets(entries.begin(), entries.end());
  Eigen::VectorXd rhs(k);
  for (NodeId v = 0; v < node_count; ++v)
    if (v != ground) rhs(idx(v)) = b[v];
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>, Eigen::Lower, Eigen::NaturalOrdering<int>> llt(reduced);
  if (llt.info() != Eigen::Success) throw NumericalError("grounded Laplacian is singular (disconnected graph)");
  const Eigen::VectorXd x = llt.solve(rhs);
  for (NodeId v = 0; v < node_count; ++v)
    if (v != ground) phi[v] = x(idx(v));
  return phi;
}

}  // namespace netreconf
