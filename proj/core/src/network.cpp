#include "netreconf/network.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "disjoint_sets.hpp"
#include "netreconf/error.hpp"

namespace netreconf {

Network::Network(std::size_t node_count, NodeId root, std::vector<Edge> edges,
                 std::vector<double> demands)
    : node_count_(node_count), root_(root), edges_(std::move(edges)), demands_(std::move(demands)) {
  if (node_count_ == 0) throw std::invalid_argument("network must have at least one node");
  if (root_ >= node_count_) throw std::invalid_argument("root index out of range");
  if (demands_.size() != node_count_)
    throw std::invalid_argument("demand vector length does not match node count");
  for (const Edge& e : edges_) {
    if (e.tail >= node_count_ || e.head >= node_count_)
      throw std::invalid_argument("edge endpoint out of range");
  }
  for (Edge& e : edges_) {
    if (e.head < e.tail) std::swap(e.head, e.tail);
  }
  demands_[root_] = 0.0;
  total_demand_ = 0.0;
  for (NodeId v = 0; v < node_count_; ++v) {
    if (v != root_) total_demand_ += demands_[v];
  }

  // CSR adjacency; self-loops appear once.
  std::vector<std::size_t> degree(node_count_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.tail];
    if (e.head != e.tail) ++degree[e.head];
  }
  offsets_.assign(node_count_ + 1, 0);
  for (std::size_t v = 0; v < node_count_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[cursor[e.tail]++] = {id, e.head};
    if (e.head != e.tail) adjacency_[cursor[e.head]++] = {id, e.tail};
  }
}

std::vector<double> Network::demand_vector() const {
  std::vector<double> b(demands_);
  b[root_] = -total_demand_;
  return b;
}

Network Network::with_edges(std::span<const EdgeId> keep) const {
  std::vector<Edge> kept;
  kept.reserve(keep.size());
  for (EdgeId e : keep) kept.push_back(edges_.at(e));
  return Network(node_count_, root_, std::move(kept), demands_);
}

Network Network::with_demands(std::vector<double> demands) const {
  return Network(node_count_, root_, edges_, std::move(demands));
}

ValidationReport validate_network(const Network& net) {
  ValidationReport report;
  detail::DisjointSets sets(net.node_count());
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    const Edge& e = net.edge(id);
    if (e.tail == e.head) report.violations.push_back("self-loop at edge " + std::to_string(id));
    if (!(e.resistance > 0.0) || !std::isfinite(e.resistance))
      report.violations.push_back("nonpositive resistance at edge " + std::to_string(id));
    sets.unite(e.tail, e.head);
  }
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (v == net.root()) continue;
    const double d = net.demand(v);
    if (!(d >= 0.0) || !std::isfinite(d))
      report.violations.push_back("negative demand at node " + std::to_string(v));
  }
  if (sets.components() > 1) report.violations.insert(report.violations.begin(), "disconnected");
  return report;
}

bool is_spanning_tree(const Network& net, std::span<const EdgeId> edges) {
  if (edges.size() + 1 != net.node_count()) return false;
  detail::DisjointSets sets(net.node_count());
  for (EdgeId e : edges) {
    if (e >= net.edge_count()) return false;
    if (!sets.unite(net.edge(e).tail, net.edge(e).head)) return false;
  }
  return sets.components() == 1;
}

RootedTree RootedTree::from_edges(const Network& net, std::span<const EdgeId> edges) {
  if (!is_spanning_tree(net, edges)) throw StructuralError("edge set is not a spanning tree");
  const std::size_t n = net.node_count();
  RootedTree tree;
  tree.root_ = net.root();
  tree.edges_.assign(edges.begin(), edges.end());
  std::sort(tree.edges_.begin(), tree.edges_.end());

  std::vector<char> in_tree(net.edge_count(), 0);
  for (EdgeId e : tree.edges_) in_tree[e] = 1;

  tree.parent_.assign(n, kNoNode);
  tree.parent_edge_.assign(n, kNoEdge);
  tree.depth_.assign(n, 0);
  tree.order_.reserve(n);
  std::vector<char> seen(n, 0);
  seen[tree.root_] = 1;
  tree.order_.push_back(tree.root_);
  for (std::size_t head = 0; head < tree.order_.size(); ++head) {
    const NodeId v = tree.order_[head];
    for (const Incidence& inc : net.incident(v)) {
      if (!in_tree[inc.edge] || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      tree.parent_[inc.neighbor] = v;
      tree.parent_edge_[inc.neighbor] = inc.edge;
      tree.depth_[inc.neighbor] = tree.depth_[v] + 1;
      tree.order_.push_back(inc.neighbor);
    }
  }
  return tree;
}

bool RootedTree::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<double> FlowAssignment::net_inflow(const Network& net) const {
  std::vector<double> inflow(net.node_count(), 0.0);
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    inflow[net.edge(id).head] += flow[id];
    inflow[net.edge(id).tail] -= flow[id];
  }
  return inflow;
}

double FlowAssignment::energy(const Network& net) const {
  double total = 0.0;
  for (EdgeId id = 0; id < net.edge_count(); ++id)
    total += net.edge(id).resistance * flow[id] * flow[id];
  return total;
}

std::vector<double> subtree_demands(const Network& net, const RootedTree& tree) {
  std::vector<double> below(net.node_count(), 0.0);
  for (NodeId v = 0; v < net.node_count(); ++v) below[v] = v == net.root() ? 0.0 : net.demand(v);
  const auto order = tree.top_down_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId p = tree.parent(*it);
    if (p != kNoNode) below[p] += below[*it];
  }
  return below;
}

FlowAssignment tree_flow(const Network& net, const RootedTree& tree) {
  if (tree.node_count() != net.node_count() || tree.root() != net.root())
    throw StructuralError("tree does not belong to this network");
  const std::vector<double> below = subtree_demands(net, tree);
  FlowAssignment result;
  result.flow.assign(net.edge_count(), 0.0);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    const EdgeId e = tree.parent_edge(v);
    if (e == kNoEdge) continue;
    // Flow runs parent -> v; positive when v is the head.
    result.flow[e] = net.edge(e).head == v ? below[v] : -below[v];
  }
  return result;
}

double tree_energy(const Network& net, const RootedTree& tree) {
  if (tree.node_count() != net.node_count() || tree.root() != net.root())
    throw StructuralError("tree does not belong to this network");
  const std::vector<double> below = subtree_demands(net, tree);
  double total = 0.0;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    const EdgeId e = tree.parent_edge(v);
    if (e != kNoEdge) total += net.edge(e).resistance * below[v] * below[v];
  }
  return total;
}

}  // namespace netreconf
