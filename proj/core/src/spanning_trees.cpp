#include "netreconf/spanning_trees.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "disjoint_sets.hpp"
#include "netreconf/error.hpp"

namespace netreconf {

namespace {

__extension__ using Wide = __int128;

std::vector<std::vector<std::int64_t>> reduced_laplacian(const Network& net) {
  const std::size_t n = net.node_count();
  std::vector<std::size_t> index(n);
  std::size_t next = 0;
  for (NodeId v = 0; v < n; ++v) index[v] = v == net.root() ? n : next++;
  std::vector<std::vector<std::int64_t>> a(n - 1, std::vector<std::int64_t>(n - 1, 0));
  for (const Edge& e : net.edges()) {
    if (e.tail == e.head) continue;
    const std::size_t u = index[e.tail];
    const std::size_t v = index[e.head];
    if (u < n) ++a[u][u];
    if (v < n) ++a[v][v];
    if (u < n && v < n) {
      --a[u][v];
      --a[v][u];
    }
  }
  return a;
}

double count_estimate(const std::vector<std::vector<std::int64_t>>& a) {
  const auto k = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) m(i, j) = static_cast<double>(a[i][j]);
  return std::abs(m.partialPivLu().determinant());
}

}  // namespace

std::uint64_t kirchhoff_count(const Network& net) {
  if (net.node_count() == 1) return 1;
  auto a = reduced_laplacian(net);
  const std::size_t k = a.size();
  constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
  constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
  std::int64_t previous = 1;
  int sign = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t swap = p + 1;
      while (swap < k && a[swap][p] == 0) ++swap;
      if (swap == k) return 0;
      std::swap(a[p], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        const Wide value =
            (static_cast<Wide>(a[i][j]) * a[p][p] - static_cast<Wide>(a[i][p]) * a[p][j]) / previous;
        if (value < lo || value > hi) throw CountOverflow(count_estimate(reduced_laplacian(net)));
        a[i][j] = static_cast<std::int64_t>(value);
      }
      a[i][p] = 0;
    }
    previous = a[p][p];
  }
  const std::int64_t det = sign * a[k - 1][k - 1];
  return det < 0 ? 0 : static_cast<std::uint64_t>(det);
}

namespace {

class Enumerator {
 public:
  Enumerator(const Network& net, const std::function<bool(std::span<const EdgeId>)>& visit)
      : net_(net), visit_(visit), parent_(net.node_count()), size_(net.node_count(), 1) {
    for (NodeId v = 0; v < net.node_count(); ++v) parent_[v] = v;
  }

  std::uint64_t run() {
    if (net_.node_count() == 1) {
      ++count_;
      visit_({});
      return count_;
    }
    recurse(net_.edge_count());
    return count_;
  }

 private:
  NodeId find(NodeId x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Edges with index < undecided are still open.
  bool connectable(std::size_t undecided) const {
    detail::DisjointSets sets(net_.node_count());
    for (EdgeId e : chosen_) sets.unite(net_.edge(e).tail, net_.edge(e).head);
    for (EdgeId e = 0; e < undecided; ++e) sets.unite(net_.edge(e).tail, net_.edge(e).head);
    return sets.components() == 1;
  }

  void recurse(std::size_t undecided) {
    if (stopped_) return;
    if (chosen_.size() + 1 == net_.node_count()) {
      ++count_;
      sorted_.assign(chosen_.rbegin(), chosen_.rend());
      if (!visit_(sorted_)) stopped_ = true;
      return;
    }
    if (undecided == 0) return;
    const EdgeId e = static_cast<EdgeId>(undecided - 1);
    NodeId a = find(net_.edge(e).tail);
    NodeId b = find(net_.edge(e).head);
    if (a != b) {
      if (size_[a] < size_[b]) std::swap(a, b);
      parent_[b] = a;
      size_[a] += size_[b];
      chosen_.push_back(e);
      recurse(undecided - 1);
      chosen_.pop_back();
      size_[a] -= size_[b];
      parent_[b] = b;
    }
    if (!stopped_ && connectable(undecided - 1)) recurse(undecided - 1);
  }

  const Network& net_;
  const std::function<bool(std::span<const EdgeId>)>& visit_;
  std::vector<NodeId> parent_;
  std::vector<std::size_t> size_;
  std::vector<EdgeId> chosen_;
  std::vector<EdgeId> sorted_;
  std::uint64_t count_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::uint64_t for_each_spanning_tree(const Network& net,
                                     const std::function<bool(std::span<const EdgeId>)>& visit,
                                     std::uint64_t cap) {
  std::uint64_t total = 0;
  try {
    total = kirchhoff_count(net);
  } catch (const CountOverflow& overflow) {
    throw EnumerationCapExceeded(overflow.estimate(), cap);
  }
  if (total > cap) throw EnumerationCapExceeded(static_cast<double>(total), cap);
  if (total == 0) return 0;
  return Enumerator(net, visit).run();
}

OptimumTree brute_force_opt(const Network& net, std::uint64_t cap) {
  std::vector<EdgeId> best_edges;
  double best = std::numeric_limits<double>::infinity();
  for_each_spanning_tree(
      net,
      [&](std::span<const EdgeId> edges) {
        const double energy = tree_energy(net, RootedTree::from_edges(net, edges));
        if (energy < best) {
          best = energy;
          best_edges.assign(edges.begin(), edges.end());
        }
        return true;
      },
      cap);
  if (best_edges.empty() && net.node_count() > 1) throw StructuralError("network has no spanning tree");
  return {RootedTree::from_edges(net, best_edges), best == std::numeric_limits<double>::infinity() ? 0.0 : best};
}

}  // namespace netreconf
