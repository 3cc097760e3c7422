#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "netreconf/network.hpp"

namespace netreconf {

/// One merge of a level: positions (in that level's value list) of the
/// smaller and of the second-smaller value. The merged value takes the
/// leftmost of the two positions.
struct MergeRecord {
  std::size_t first = 0;
  std::size_t second = 0;
};

/// levels[0] is (m-n)+1 .. (m-n)+n; each following level has one value fewer,
/// obtained by merging the two smallest values and adding one to all of them.
/// The last level has two values. merges[l] turns levels[l] into levels[l+1].
struct MergePlan {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::int64_t>> levels;
  std::vector<MergeRecord> merges;
};

/// Ties between equal values are broken by position (leftmost first).
/// Throws std::invalid_argument unless 2 <= n <= m.
MergePlan merge_sequence(std::size_t n, std::size_t m);

/// Order of the starting values 1..n along the main diagonal such that every
/// planned merge joins two contiguous blocks: the leaves of the merge tree in
/// in-order, with each merge's smaller operand on the left.
std::vector<std::size_t> uncross(const MergePlan& plan);

/// True iff, with the given diagonal order, every merge of the plan joins two
/// blocks adjacent on the diagonal.
bool merges_adjacent(const MergePlan& plan, const std::vector<std::size_t>& perm);

/// A tree edge between grid cells, parent first.
struct CellStep {
  std::size_t parent_row = 0;
  std::size_t parent_col = 0;
  std::size_t child_row = 0;
  std::size_t child_col = 0;
};

/// Vertex-disjoint monotone paths covering the lower triangle of an n x n grid
/// (cells with r + c >= n - 1) such that the main-diagonal cell in row j roots
/// a path set of exactly perm[j] cells. The cell whose count is 1 ends; the
/// others continue down (rows above it) or right (rows below it).
std::vector<CellStep> diagonal_paths(const std::vector<std::size_t>& perm, std::size_t n);

struct MinMinResult {
  RootedTree tree;
  MergePlan plan;
  std::vector<std::size_t> perm;
  /// d_max / d_min over non-root nodes (1 when demands are uniform or absent).
  double alpha = 1.0;
};

/// Min-Min tree for a full rows x cols grid with a corner root and uniform
/// resistances. Demands do not influence the construction.
/// Throws StructuralError for any other input.
MinMinResult minmin(std::size_t rows, std::size_t cols, const Network& net);

}  // namespace netreconf
