#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace netreconf {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// Undirected line with a fixed reference orientation tail -> head, where
/// tail is the lower endpoint. Flow values are signed along that orientation.
struct Edge {
  NodeId tail = 0;
  NodeId head = 0;
  double resistance = 1.0;

  double conductance() const { return 1.0 / resistance; }
  NodeId other(NodeId x) const { return x == tail ? head : tail; }
};

struct Incidence {
  EdgeId edge;
  NodeId neighbor;
};

/// A problem instance: connected graph, root (substation), per-edge
/// resistance and per-node nonnegative demand.
///
/// Construction only rejects malformed indices. The remaining invariants
/// (connectivity, positive resistances, nonnegative demands, no self-loops)
/// are reported by validate_network() so invalid instances can be inspected.
/// The root's demand is never stored: demand(root) is minus the total.
class Network {
 public:
  Network() = default;

  /// `demands` has one entry per node; the root's entry is ignored.
  /// Edge endpoints are reordered so that tail < head.
  /// Throws std::invalid_argument on out-of-range indices or size mismatch.
  Network(std::size_t node_count, NodeId root, std::vector<Edge> edges,
          std::vector<double> demands);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  NodeId root() const { return root_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Demand of a node; for the root this is -total_demand().
  double demand(NodeId v) const { return v == root_ ? -total_demand_ : demands_[v]; }
  double total_demand() const { return total_demand_; }

  /// The full balanced demand vector b (root entry negative).
  std::vector<double> demand_vector() const;

  std::span<const Incidence> incident(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  /// Same instance restricted to a subset of its edges (kept in the given order).
  Network with_edges(std::span<const EdgeId> keep) const;

  /// Same graph with different demands (root entry ignored).
  Network with_demands(std::vector<double> demands) const;

 private:
  std::size_t node_count_ = 0;
  NodeId root_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> demands_;
  double total_demand_ = 0.0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_network(const Network& net);

/// True iff `edges` has n-1 members and connects every node.
bool is_spanning_tree(const Network& net, std::span<const EdgeId> edges);

/// Spanning tree oriented toward the root.
class RootedTree {
 public:
  /// Throws StructuralError unless `edges` is a spanning tree of `net`.
  static RootedTree from_edges(const Network& net, std::span<const EdgeId> edges);

  std::size_t node_count() const { return parent_.size(); }
  NodeId root() const { return root_; }

  /// Tree edges, sorted by index.
  std::span<const EdgeId> edges() const { return edges_; }
  bool contains(EdgeId e) const;

  NodeId parent(NodeId v) const { return parent_[v]; }
  EdgeId parent_edge(NodeId v) const { return parent_edge_[v]; }
  std::size_t depth(NodeId v) const { return depth_[v]; }

  /// Nodes in breadth-first order from the root (root first).
  std::span<const NodeId> top_down_order() const { return order_; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.root_ == b.root_ && a.edges_ == b.edges_;
  }

 private:
  NodeId root_ = 0;
  std::vector<EdgeId> edges_;
  std::vector<NodeId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::size_t> depth_;
  std::vector<NodeId> order_;
};

/// Per-edge signed flow along each edge's tail -> head orientation, with
/// node potentials when the flow is electrical.
struct FlowAssignment {
  std::vector<double> flow;
  std::optional<std::vector<double>> potentials;

  /// Net inflow minus outflow at every node.
  std::vector<double> net_inflow(const Network& net) const;

  /// sum_e r_e f_e^2
  double energy(const Network& net) const;
};

/// Total demand of the subtree hanging below each node (the node included).
std::vector<double> subtree_demands(const Network& net, const RootedTree& tree);

/// The unique feasible flow supported on the tree: every tree edge carries the
/// demand of the subtree below it, away from the root; other edges carry 0.
FlowAssignment tree_flow(const Network& net, const RootedTree& tree);

/// sum over tree edges of r_e * (subtree demand)^2
double tree_energy(const Network& net, const RootedTree& tree);

}  // namespace netreconf
