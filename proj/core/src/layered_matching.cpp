#include "netreconf/layered_matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "disjoint_sets.hpp"
#include "netreconf/error.hpp"
#include "netreconf/laplacian.hpp"

namespace netreconf {

LayerPartition bfs_layers(const Network& net) {
  const std::size_t n = net.node_count();
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  LayerPartition part;
  part.layer_of.assign(n, unseen);
  part.layer_of[net.root()] = 0;
  part.layers.push_back({net.root()});
  while (true) {
    std::vector<NodeId> next;
    for (NodeId u : part.layers.back()) {
      for (const Incidence& inc : net.incident(u)) {
        if (part.layer_of[inc.neighbor] != unseen) continue;
        part.layer_of[inc.neighbor] = part.layers.size();
        next.push_back(inc.neighbor);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    part.layers.push_back(std::move(next));
  }
  for (NodeId v = 0; v < n; ++v)
    if (part.layer_of[v] == unseen) throw StructuralError("graph is disconnected");
  part.cross_edges.assign(part.layers.size(), {});
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const std::size_t a = part.layer_of[net.edge(e).tail];
    const std::size_t b = part.layer_of[net.edge(e).head];
    if (a + 1 == b) part.cross_edges[b].push_back(e);
    else if (b + 1 == a) part.cross_edges[a].push_back(e);
  }
  return part;
}

MatchingResult layer_matching(const LayerProblem& problem) {
  const std::size_t k = problem.children.size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  MatchingResult result;
  result.choice.assign(k, none);
  std::vector<double> best(k, std::numeric_limits<double>::infinity());
  for (std::size_t c = 0; c < problem.candidates.size(); ++c) {
    const MatchingCandidate& cand = problem.candidates[c];
    const double dev = std::abs(problem.demand[cand.child] - cand.flow);
    std::size_t& chosen = result.choice[cand.child];
    bool better = chosen == none || dev < best[cand.child];
    if (!better && dev == best[cand.child]) {
      const MatchingCandidate& cur = problem.candidates[chosen];
      better = cand.parent < cur.parent || (cand.parent == cur.parent && cand.edge < cur.edge);
    }
    if (better) {
      chosen = c;
      best[cand.child] = dev;
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (result.choice[j] == none) throw StructuralError("child has no neighbour in the parent layer");
    result.epsilon = std::max(result.epsilon, best[j]);
  }
  return result;
}

namespace {

/// Relaxed flow on every original edge (tail -> head), computed on the graph
/// obtained by contracting each component of `sets`.
std::vector<double> contracted_flow(const Network& net, detail::DisjointSets& sets,
                                    const std::vector<double>& component_demand) {
  const std::size_t n = net.node_count();
  std::vector<NodeId> index(n, kNoNode);
  std::size_t count = 0;
  for (NodeId v = 0; v < n; ++v) {
    const auto rep = static_cast<NodeId>(sets.find(v));
    if (index[rep] == kNoNode) index[rep] = static_cast<NodeId>(count++);
  }
  std::vector<Edge> edges;
  std::vector<EdgeId> original;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const NodeId a = index[sets.find(net.edge(e).tail)];
    const NodeId b = index[sets.find(net.edge(e).head)];
    if (a == b) continue;
    edges.push_back({a, b, net.edge(e).resistance});
    original.push_back(e);
  }
  std::vector<double> b(count, 0.0);
  const NodeId ground = index[sets.find(net.root())];
  for (NodeId v = 0; v < n; ++v) {
    const auto rep = static_cast<NodeId>(sets.find(v));
    if (static_cast<NodeId>(v) == rep && index[rep] != ground) b[index[rep]] = component_demand[rep];
  }
  double total = 0.0;
  for (double x : b) total += x;
  b[ground] = -total;
  const std::vector<double> phi = grounded_potentials(count, edges, b, ground);
  std::vector<double> flow(net.edge_count(), 0.0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    // Orientation of the original edge: tail's component -> head's component.
    const EdgeId e = original[i];
    const NodeId a = index[sets.find(net.edge(e).tail)];
    const NodeId c = index[sets.find(net.edge(e).head)];
    flow[e] = (phi[c] - phi[a]) / net.edge(e).resistance;
  }
  return flow;
}

}  // namespace

LmResult lm_heuristic(const Network& net, const LmOptions& options, const LmObserver& observer) {
  const std::size_t n = net.node_count();
  const LayerPartition part = bfs_layers(net);
  detail::DisjointSets sets(n);
  std::vector<double> component_demand(n, 0.0);
  for (NodeId v = 0; v < n; ++v) component_demand[v] = v == net.root() ? 0.0 : net.demand(v);

  LmResult result;
  result.epsilon.assign(part.layers.size(), 0.0);
  std::vector<EdgeId> tree;
  tree.reserve(n > 0 ? n - 1 : 0);
  std::vector<double> flow;
  if (options.static_relaxation && n > 1) flow = contracted_flow(net, sets, component_demand);

  for (std::size_t k = part.layers.size(); k-- > 1;) {
    if (!options.static_relaxation) flow = contracted_flow(net, sets, component_demand);
    LayerProblem problem;
    problem.children = part.layers[k];
    std::vector<std::size_t> slot(n, 0);
    for (std::size_t j = 0; j < problem.children.size(); ++j) {
      const NodeId child = problem.children[j];
      slot[child] = j;
      problem.demand.push_back(component_demand[sets.find(child)]);
    }
    for (EdgeId e : part.cross_edges[k]) {
      const Edge& edge = net.edge(e);
      const bool tail_is_child = part.layer_of[edge.tail] == k;
      const NodeId child = tail_is_child ? edge.tail : edge.head;
      const NodeId parent = edge.other(child);
      const double parent_to_child = tail_is_child ? -flow[e] : flow[e];
      problem.candidates.push_back({parent, slot[child], e, parent_to_child});
    }
    const MatchingResult match = layer_matching(problem);
    result.epsilon[k] = match.epsilon;
    if (observer) observer(k, problem, match);
    for (std::size_t j = 0; j < problem.children.size(); ++j) {
      const MatchingCandidate& cand = problem.candidates[match.choice[j]];
      tree.push_back(cand.edge);
      const double moved = component_demand[sets.find(problem.children[j])];
      const double kept = component_demand[sets.find(cand.parent)];
      sets.unite(cand.parent, problem.children[j]);
      component_demand[sets.find(cand.parent)] = moved + kept;
    }
  }
  result.tree = RootedTree::from_edges(net, tree);
  return result;
}

}  // namespace netreconf
