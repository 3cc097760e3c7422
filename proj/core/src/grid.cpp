#include "netreconf/grid.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "netreconf/error.hpp"

namespace netreconf {

std::vector<Edge> grid_edges(std::size_t rows, std::size_t cols, double resistance) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto id = static_cast<NodeId>(r * cols + c);
      if (c + 1 < cols) edges.push_back({id, static_cast<NodeId>(id + 1), resistance});
      if (r + 1 < rows) edges.push_back({id, static_cast<NodeId>(id + cols), resistance});
    }
  }
  return edges;
}

namespace {

bool grid_neighbours(NodeId a, NodeId b, std::size_t cols) {
  const std::size_t lo = std::min(a, b);
  const std::size_t hi = std::max(a, b);
  if (hi - lo == cols) return true;
  return hi - lo == 1 && hi % cols != 0;
}

}  // namespace

bool is_grid_subgraph(const Network& net, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0 || net.node_count() != rows * cols) return false;
  return std::all_of(net.edges().begin(), net.edges().end(),
                     [&](const Edge& e) { return grid_neighbours(e.tail, e.head, cols); });
}

GridView::GridView(const Network& net, std::size_t rows, std::size_t cols)
    : net_(&net), original_cols_(cols), original_rows_(rows) {
  if (!is_grid_subgraph(net, rows, cols)) throw StructuralError("network is not a grid of this size");
  const std::size_t expected = rows * (cols - 1) + cols * (rows - 1);
  if (net.edge_count() != expected) throw StructuralError("grid is not complete");
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : net.edges()) {
    if (!seen.emplace(e.tail, e.head).second) throw StructuralError("grid has parallel edges");
  }
  const std::size_t root_r = net.root() / cols;
  const std::size_t root_c = net.root() % cols;
  if ((root_r != 0 && root_r != rows - 1) || (root_c != 0 && root_c != cols - 1))
    throw StructuralError("grid root is not at a corner");
  flip_rows_ = root_r != 0;
  flip_cols_ = root_c != 0;
  transposed_ = rows > cols;
  rows_ = transposed_ ? cols : rows;
  cols_ = transposed_ ? rows : cols;

  diagonal_.assign(net.node_count(), 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) diagonal_[node(r, c)] = r + c;
}

NodeId GridView::node(std::size_t r, std::size_t c) const {
  std::size_t orow = transposed_ ? c : r;
  std::size_t ocol = transposed_ ? r : c;
  if (flip_rows_) orow = original_rows_ - 1 - orow;
  if (flip_cols_) ocol = original_cols_ - 1 - ocol;
  return static_cast<NodeId>(orow * original_cols_ + ocol);
}

EdgeId GridView::edge_between(std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) const {
  const NodeId a = node(r1, c1);
  const NodeId b = node(r2, c2);
  for (const Incidence& inc : net_->incident(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  throw StructuralError("cells are not adjacent in the grid");
}

std::vector<std::vector<NodeId>> diagonal_cut_sets(std::size_t rows, std::size_t cols) {
  std::vector<std::vector<NodeId>> cuts;
  if (rows + cols < 3) return cuts;
  for (std::size_t k = 0; k + 3 <= rows + cols; ++k) {
    std::vector<NodeId> side;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols && r + c <= k; ++c) side.push_back(static_cast<NodeId>(r * cols + c));
    std::sort(side.begin(), side.end());
    cuts.push_back(std::move(side));
  }
  return cuts;
}

}  // namespace netreconf
