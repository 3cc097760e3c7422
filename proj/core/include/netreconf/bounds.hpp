#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "netreconf/network.hpp"

namespace netreconf {

/// Vertex cuts S_i, each containing the root, with their boundary edges and
/// the multiplicity M = max over edges of the number of boundaries containing it.
struct CutFamily {
  std::vector<std::vector<NodeId>> cuts;
  std::vector<std::vector<EdgeId>> boundaries;
  std::size_t multiplicity = 0;

  /// Throws StructuralError if some set misses the root or names an unknown node.
  static CutFamily build(const Network& net, std::vector<std::vector<NodeId>> sets);
};

/// {"multiplicity": M, "cuts": [{"nodes": [...], "boundary": [...]}, ...]}
std::string cut_family_to_json(const CutFamily& family, int indent = 2);

/// Energy of the electrical flow on the whole graph.
double flow_relaxation_bound(const Network& net);

/// Dijkstra tree with respect to resistances; among equal-length parents the
/// smaller edge index wins.
RootedTree shortest_path_tree(const Network& net);

/// (1/M) * sum_i rmin_i * D_i^2 / |boundary_i|, where D_i is the demand outside
/// S_i and rmin_i the smallest resistance on the boundary.
/// Throws StructuralError if a boundary is empty.
double cut_lower_bound(const Network& net, const CutFamily& cuts);

struct GridBound {
  double value = 0.0;
  /// Contribution of cuts whose next diagonal lies in the first cols() diagonals
  /// (upper triangle plus any middle band) and of the remaining cuts.
  double upper = 0.0;
  double lower = 0.0;
  /// Per-cut terms in cut order.
  std::vector<double> terms;
  CutFamily cuts;
};

/// Diagonal cut bound for a full rows x cols grid with a corner root and
/// uniform resistance r: sum over k of r * D_k^2 / |diagonal k+1|, where
/// S_k = { r + c <= k } in coordinates with the root at (0, 0).
/// Throws StructuralError for other inputs.
GridBound grid_diagonal_bound(std::size_t rows, std::size_t cols, const Network& net);

/// Unit-demand square grid, upper triangle: sum_{i=1}^{n-1} S_i^2/(i+1) with
/// S_i = n^2 - i(i+1)/2, in closed form
///   n^4 (H_n - 1) + (n-1)^2 n^2 / 16 + (n-1) n (2n-1) / 24 - n^3 (n-1) / 2.
double upper_triangle_bound_closed_form(std::size_t n);

/// The polynomial n^4 ln(n+1) - 23/16 n^4 + 11/24 n^3 - 1/16 n^2 + n/24,
/// which never exceeds the closed form above.
double upper_triangle_bound_polynomial(std::size_t n);

/// Spanning tree using only boundary edges, each oriented from S_i to its
/// complement in every cut containing it. Throws StructuralError if none exists.
RootedTree laminar_tree_from_cuts(const Network& net, const CutFamily& cuts);

/// True iff every tree edge on a boundary points from inside the cut to outside.
bool is_cut_oriented(const RootedTree& tree, const Network& net, const CutFamily& cuts);

}  // namespace netreconf
