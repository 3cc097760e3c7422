#include "netreconf/minmin.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "netreconf/error.hpp"
#include "netreconf/grid.hpp"

namespace netreconf {

MergePlan merge_sequence(std::size_t n, std::size_t m) {
  if (n < 2 || n > m) throw std::invalid_argument("merge sequence needs 2 <= n <= m");
  MergePlan plan;
  plan.rows = n;
  plan.cols = m;
  std::vector<std::int64_t> cur(n);
  std::iota(cur.begin(), cur.end(), static_cast<std::int64_t>(m - n + 1));
  plan.levels.push_back(cur);
  while (cur.size() > 2) {
    auto smallest_except = [&](std::size_t skip) {
      std::size_t best = skip == 0 ? 1 : 0;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (i != skip && cur[i] < cur[best]) best = i;
      return best;
    };
    const std::size_t a = smallest_except(std::numeric_limits<std::size_t>::max());
    const std::size_t b = smallest_except(a);
    plan.merges.push_back({a, b});
    const std::int64_t merged = cur[a] + cur[b];
    cur[std::min(a, b)] = merged;
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(std::max(a, b)));
    for (auto& v : cur) ++v;
    plan.levels.push_back(cur);
  }
  return plan;
}

namespace {

struct MergeTree {
  // Leaves are 0..n-1; internal node i >= n has children left[i - n], right[i - n].
  std::size_t leaves = 0;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  std::vector<std::size_t> roots;

  void in_order(std::size_t node, std::vector<std::size_t>& out) const {
    if (node < leaves) {
      out.push_back(node);
      return;
    }
    in_order(left[node - leaves], out);
    in_order(right[node - leaves], out);
  }
};

MergeTree merge_tree(const MergePlan& plan) {
  MergeTree tree;
  tree.leaves = plan.rows;
  std::vector<std::size_t> cur(plan.rows);
  std::iota(cur.begin(), cur.end(), std::size_t{0});
  for (const MergeRecord& merge : plan.merges) {
    const std::size_t id = tree.leaves + tree.left.size();
    tree.left.push_back(cur[merge.first]);
    tree.right.push_back(cur[merge.second]);
    cur[std::min(merge.first, merge.second)] = id;
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(std::max(merge.first, merge.second)));
  }
  tree.roots = cur;
  return tree;
}

struct Block {
  std::size_t lo;
  std::size_t hi;
  std::size_t size;
};

}  // namespace

std::vector<std::size_t> uncross(const MergePlan& plan) {
  const MergeTree tree = merge_tree(plan);
  std::vector<std::size_t> leaves;
  for (std::size_t root : tree.roots) tree.in_order(root, leaves);
  for (auto& leaf : leaves) ++leaf;
  return leaves;
}

bool merges_adjacent(const MergePlan& plan, const std::vector<std::size_t>& perm) {
  const std::size_t n = plan.rows;
  if (perm.size() != n) return false;
  std::vector<std::size_t> position(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] < 1 || perm[j] > n || position[perm[j] - 1] != n) return false;
    position[perm[j] - 1] = j;
  }
  std::vector<Block> cur;
  for (std::size_t leaf = 0; leaf < n; ++leaf) cur.push_back({position[leaf], position[leaf], 1});
  for (const MergeRecord& merge : plan.merges) {
    const Block& a = cur[merge.first];
    const Block& b = cur[merge.second];
    const Block joined{std::min(a.lo, b.lo), std::max(a.hi, b.hi), a.size + b.size};
    if (joined.hi - joined.lo + 1 != joined.size) return false;
    cur[std::min(merge.first, merge.second)] = joined;
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(std::max(merge.first, merge.second)));
  }
  return true;
}

std::vector<CellStep> diagonal_paths(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) throw std::invalid_argument("permutation length does not match grid size");
  std::vector<std::size_t> sorted(perm);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < n; ++j)
    if (sorted[j] != j + 1) throw std::invalid_argument("not a permutation of 1..n");

  std::vector<CellStep> steps;
  std::vector<std::size_t> values(perm);
  for (std::size_t k = n - 1; values.size() > 1; ++k) {
    const std::size_t first_row = k - (n - 1);
    const auto ends = static_cast<std::size_t>(std::find(values.begin(), values.end(), 1) - values.begin());
    std::vector<std::size_t> next;
    for (std::size_t p = 0; p < values.size(); ++p) {
      if (p == ends) continue;
      const std::size_t r = first_row + p;
      const std::size_t c = k - r;
      if (p < ends) steps.push_back({r, c, r + 1, c});
      else steps.push_back({r, c, r, c + 1});
      next.push_back(values[p] - 1);
    }
    values = std::move(next);
  }
  return steps;
}

MinMinResult minmin(std::size_t rows, std::size_t cols, const Network& net) {
  const GridView view(net, rows, cols);
  for (const Edge& e : net.edges())
    if (e.resistance != net.edges().front().resistance) throw StructuralError("grid resistances are not uniform");

  MinMinResult result;
  double dmin = std::numeric_limits<double>::infinity();
  double dmax = 0.0;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (v == net.root()) continue;
    dmin = std::min(dmin, net.demand(v));
    dmax = std::max(dmax, net.demand(v));
  }
  if (dmax > 0.0) result.alpha = dmin > 0.0 ? dmax / dmin : std::numeric_limits<double>::infinity();

  const std::size_t n = view.rows();
  const std::size_t m = view.cols();
  std::vector<EdgeId> edges;
  auto link = [&](std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) {
    edges.push_back(view.edge_between(r1, c1, r2, c2));
  };

  if (n == 1) {
    for (std::size_t c = 0; c + 1 < m; ++c) link(0, c, 0, c + 1);
    result.perm = {1};
    result.tree = RootedTree::from_edges(net, edges);
    return result;
  }

  result.plan = merge_sequence(n, m);
  result.perm = uncross(result.plan);
  std::vector<std::size_t> position(n);
  for (std::size_t j = 0; j < n; ++j) position[result.perm[j] - 1] = j;

  // Upper triangle: the level with L values occupies diagonal L - 1, one block
  // per cell, ordered along the diagonal by their leftmost leaf.
  std::vector<std::size_t> lowest(position);
  for (std::size_t l = 0; l < result.plan.merges.size(); ++l) {
    const std::size_t count = result.plan.levels[l].size();
    const std::size_t diag = count - 1;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lowest[a] < lowest[b]; });
    std::vector<std::size_t> rank(count);
    for (std::size_t p = 0; p < count; ++p) rank[order[p]] = p;
    const MergeRecord& merge = result.plan.merges[l];
    const std::size_t joint = std::min(rank[merge.first], rank[merge.second]);
    if (std::max(rank[merge.first], rank[merge.second]) != joint + 1)
      throw std::logic_error("uncrossed merge is not adjacent");
    for (std::size_t p = 0; p < count; ++p) {
      if (p <= joint) link(p, diag - 1 - p, p, diag - p);
      else link(p - 1, diag - p, p, diag - p);
    }
    lowest[std::min(merge.first, merge.second)] = std::min(lowest[merge.first], lowest[merge.second]);
    lowest.erase(lowest.begin() + static_cast<std::ptrdiff_t>(std::max(merge.first, merge.second)));
  }
  link(0, 0, 0, 1);
  link(0, 0, 1, 0);

  for (std::size_t k = n - 1; k + 1 < m; ++k)
    for (std::size_t r = 0; r < n; ++r) link(r, k - r, r, k + 1 - r);

  for (const CellStep& s : diagonal_paths(result.perm, n))
    link(s.parent_row, s.parent_col + (m - n), s.child_row, s.child_col + (m - n));

  result.tree = RootedTree::from_edges(net, edges);
  return result;
}

}  // namespace netreconf
