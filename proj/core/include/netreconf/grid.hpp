#pragma once

#include <cstddef>
#include <vector>

#include "netreconf/network.hpp"

namespace netreconf {

/// Grid instances number nodes row-major: node(r, c) = r * cols + c, and list
/// edges node by node with the right neighbour before the lower one.
std::vector<Edge> grid_edges(std::size_t rows, std::size_t cols, double resistance = 1.0);

/// Read-only view of a full rows x cols grid instance in canonical coordinates:
/// the root sits at (0, 0) and rows() <= cols(). Any corner root and either
/// orientation are accepted; the view reflects/transposes as needed.
class GridView {
 public:
  /// Throws StructuralError if `net` is not the full rows x cols grid in the
  /// layout above, or the root is not at a corner.
  GridView(const Network& net, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Node at canonical coordinates (r, c).
  NodeId node(std::size_t r, std::size_t c) const;

  /// The grid edge joining two adjacent canonical cells.
  EdgeId edge_between(std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) const;

  /// Anti-diagonal index r + c of a node in canonical coordinates.
  std::size_t diagonal_of(NodeId v) const { return diagonal_[v]; }

 private:
  const Network* net_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t original_cols_ = 0;
  bool transposed_ = false;
  bool flip_rows_ = false;
  bool flip_cols_ = false;
  std::size_t original_rows_ = 0;
  std::vector<std::size_t> diagonal_;
};

/// True iff node count is rows*cols and every edge joins grid neighbours
/// (a possibly sparsified grid). Used to decide whether diagonal cuts apply.
bool is_grid_subgraph(const Network& net, std::size_t rows, std::size_t cols);

/// Diagonal cuts of a (possibly sparsified) grid with the root at node 0:
/// S_k = { (r, c) : r + c <= k } for k = 0 .. rows + cols - 3.
std::vector<std::vector<NodeId>> diagonal_cut_sets(std::size_t rows, std::size_t cols);

}  // namespace netreconf
