#include "netreconf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include <json.hpp>

#include "netreconf/error.hpp"
#include "netreconf/grid.hpp"
#include "netreconf/laplacian.hpp"

namespace netreconf {

CutFamily CutFamily::build(const Network& net, std::vector<std::vector<NodeId>> sets) {
  CutFamily family;
  std::vector<std::size_t> count(net.edge_count(), 0);
  std::vector<char> inside(net.node_count(), 0);
  for (auto& set : sets) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::fill(inside.begin(), inside.end(), 0);
    for (NodeId v : set) {
      if (v >= net.node_count()) throw StructuralError("cut names an unknown node");
      inside[v] = 1;
    }
    if (!inside[net.root()]) throw StructuralError("cut does not contain the root");
    std::vector<EdgeId> boundary;
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      if (inside[net.edge(e).tail] != inside[net.edge(e).head]) {
        boundary.push_back(e);
        ++count[e];
      }
    }
    family.boundaries.push_back(std::move(boundary));
  }
  family.cuts = std::move(sets);
  family.multiplicity = count.empty() ? 0 : *std::max_element(count.begin(), count.end());
  return family;
}

std::string cut_family_to_json(const CutFamily& family, int indent) {
  nlohmann::json doc;
  doc["multiplicity"] = family.multiplicity;
  nlohmann::json cuts = nlohmann::json::array();
  for (std::size_t i = 0; i < family.cuts.size(); ++i)
    cuts.push_back({{"nodes", family.cuts[i]}, {"boundary", family.boundaries[i]}});
  doc["cuts"] = std::move(cuts);
  return doc.dump(indent) + "\n";
}

double flow_relaxation_bound(const Network& net) {
  return flow_energy(LaplacianState(net), net);
}

RootedTree shortest_path_tree(const Network& net) {
  const std::size_t n = net.node_count();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<EdgeId> via(n, kNoEdge);
  std::vector<char> done(n, 0);
  using Item = std::tuple<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[net.root()] = 0.0;
  queue.emplace(0.0, net.root());
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const Incidence& inc : net.incident(u)) {
      const NodeId v = inc.neighbor;
      if (done[v]) continue;
      const double nd = d + net.edge(inc.edge).resistance;
      if (nd < dist[v] || (nd == dist[v] && inc.edge < via[v])) {
        dist[v] = nd;
        via[v] = inc.edge;
        queue.emplace(nd, v);
      }
    }
  }
  std::vector<EdgeId> edges;
  for (NodeId v = 0; v < n; ++v)
    if (v != net.root()) edges.push_back(via[v]);
  return RootedTree::from_edges(net, edges);
}

namespace {

double outside_demand(const Network& net, const std::vector<NodeId>& sorted_cut) {
  double total = 0.0;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (v == net.root()) continue;
    if (!std::binary_search(sorted_cut.begin(), sorted_cut.end(), v)) total += net.demand(v);
  }
  return total;
}

}  // namespace

double cut_lower_bound(const Network& net, const CutFamily& cuts) {
  if (cuts.cuts.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < cuts.cuts.size(); ++i) {
    const auto& boundary = cuts.boundaries[i];
    if (boundary.empty()) throw StructuralError("cut has an empty boundary");
    double rmin = std::numeric_limits<double>::infinity();
    for (EdgeId e : boundary) rmin = std::min(rmin, net.edge(e).resistance);
    const double d = outside_demand(net, cuts.cuts[i]);
    sum += rmin * d * d / static_cast<double>(boundary.size());
  }
  return sum / static_cast<double>(cuts.multiplicity);
}

GridBound grid_diagonal_bound(std::size_t rows, std::size_t cols, const Network& net) {
  const GridView view(net, rows, cols);
  const double r = net.edge(0).resistance;
  for (const Edge& e : net.edges())
    if (e.resistance != r) throw StructuralError("grid resistances are not uniform");

  const std::size_t diagonals = view.rows() + view.cols() - 1;
  std::vector<double> diag_demand(diagonals, 0.0);
  std::vector<std::size_t> diag_size(diagonals, 0);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    ++diag_size[view.diagonal_of(v)];
    if (v != net.root()) diag_demand[view.diagonal_of(v)] += net.demand(v);
  }

  GridBound bound;
  std::vector<std::vector<NodeId>> sets;
  double outside = net.total_demand();
  std::vector<NodeId> side;
  for (std::size_t k = 0; k + 1 < diagonals; ++k) {
    outside -= diag_demand[k];
    for (NodeId v = 0; v < net.node_count(); ++v)
      if (view.diagonal_of(v) == k) side.push_back(v);
    sets.push_back(side);
    const double term = r * outside * outside / static_cast<double>(diag_size[k + 1]);
    bound.terms.push_back(term);
    if (k + 1 < view.cols()) bound.upper += term;
    else bound.lower += term;
  }
  bound.value = bound.upper + bound.lower;
  bound.cuts = CutFamily::build(net, std::move(sets));
  return bound;
}

double upper_triangle_bound_closed_form(std::size_t n) {
  const auto x = static_cast<double>(n);
  double harmonic = 0.0;
  for (std::size_t k = 1; k <= n; ++k) harmonic += 1.0 / static_cast<double>(k);
  return x * x * x * x * (harmonic - 1.0) + (x - 1) * (x - 1) * x * x / 16.0 +
         (x - 1) * x * (2 * x - 1) / 24.0 - x * x * x * (x - 1) / 2.0;
}

double upper_triangle_bound_polynomial(std::size_t n) {
  const auto x = static_cast<double>(n);
  return x * x * x * x * std::log(x + 1) - 23.0 / 16.0 * x * x * x * x + 11.0 / 24.0 * x * x * x -
         x * x / 16.0 + x / 24.0;
}

RootedTree laminar_tree_from_cuts(const Network& net, const CutFamily& cuts) {
  // orientation: +1 tail->head allowed, -1 head->tail, 0 unusable
  std::vector<int> orientation(net.edge_count(), 0);
  std::vector<char> conflict(net.edge_count(), 0);
  for (std::size_t i = 0; i < cuts.cuts.size(); ++i) {
    const auto& set = cuts.cuts[i];
    for (EdgeId e : cuts.boundaries[i]) {
      const bool tail_in = std::binary_search(set.begin(), set.end(), net.edge(e).tail);
      const int dir = tail_in ? 1 : -1;
      if (orientation[e] != 0 && orientation[e] != dir) conflict[e] = 1;
      orientation[e] = dir;
    }
  }
  std::vector<char> seen(net.node_count(), 0);
  std::vector<EdgeId> tree;
  std::queue<NodeId> queue;
  seen[net.root()] = 1;
  queue.push(net.root());
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop();
    for (const Incidence& inc : net.incident(u)) {
      const EdgeId e = inc.edge;
      if (conflict[e] || orientation[e] == 0 || seen[inc.neighbor]) continue;
      const bool forward = orientation[e] == 1 ? net.edge(e).tail == u : net.edge(e).head == u;
      if (!forward) continue;
      seen[inc.neighbor] = 1;
      tree.push_back(e);
      queue.push(inc.neighbor);
    }
  }
  if (tree.size() + 1 != net.node_count())
    throw StructuralError("cut boundaries do not support an outward spanning arborescence");
  return RootedTree::from_edges(net, tree);
}

bool is_cut_oriented(const RootedTree& tree, const Network& net, const CutFamily& cuts) {
  for (std::size_t i = 0; i < cuts.cuts.size(); ++i) {
    const auto& set = cuts.cuts[i];
    for (EdgeId e : cuts.boundaries[i]) {
      if (!tree.contains(e)) continue;
      const Edge& edge = net.edge(e);
      const NodeId child = tree.parent_edge(edge.head) == e ? edge.head : edge.tail;
      const NodeId parent = edge.other(child);
      if (!std::binary_search(set.begin(), set.end(), parent)) return false;
      if (std::binary_search(set.begin(), set.end(), child)) return false;
    }
  }
  return true;
}

}  // namespace netreconf
