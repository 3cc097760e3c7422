#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "netreconf/network.hpp"

namespace netreconf {

enum class InstanceKind {
  sparsified_grid,
  parallel_paths,
  grid_single_demand,
  cycle_opposite,
  triplets,
  full_grid_uniform,
};

std::string_view to_string(InstanceKind kind);
/// Throws std::invalid_argument for unknown names.
InstanceKind parse_instance_kind(std::string_view name);

struct GeneratorSpec {
  InstanceKind kind = InstanceKind::sparsified_grid;
  /// Grid dimensions (sparsified_grid, full_grid_uniform).
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Family size: paths for parallel_paths, side length for
  /// grid_single_demand, cycle length for cycle_opposite, triplet count for triplets.
  std::size_t size = 0;
  double p = 0.0;
  double demand_min = 0.5;
  double demand_max = 1.5;
  double resistance_min = 1.0;
  double resistance_max = 10.0;
  std::uint64_t seed = 0;
};

/// Full rows x cols grid rooted at node 0 with uniform random demands and
/// resistances; edges are then visited in a seeded random order and each is
/// deleted with probability p unless that would disconnect the graph.
/// Throws std::invalid_argument on an inconsistent spec.
Network gen_sparsified_grid(const GeneratorSpec& spec);

/// Deterministic families with unit resistances:
///  parallel_paths(k): root 0, sink 1 of demand 1, k two-hop paths between them.
///  grid_single_demand(s): s x s grid, root at node 0, unit demand at the far corner.
///  cycle_opposite(n): even cycle, root 0, unit demand at node n/2.
///  triplets(k): root 0, hub 3k+1, and for each j a chain 3j-2, 3j-1, 3j with
///    edges root-(3j-2), (3j-2)-(3j-1), (3j-1)-3j, 3j-hub, plus root-hub; unit
///    demands. Generation checks that the shortest-path tree costs k^2+8k+1
///    and triplets_alternative_tree costs 14k-8, and throws std::logic_error otherwise.
///  full_grid_uniform(rows, cols): unit demands, root at node 0.
Network gen_pathological(const GeneratorSpec& spec);

/// Dispatches on spec.kind.
Network generate(const GeneratorSpec& spec);

/// For triplets(k), k >= 3: the first three triplets as in the shortest-path
/// tree, every other triplet as the chain root-(3j-2)-(3j-1)-3j.
RootedTree triplets_alternative_tree(const Network& net, std::size_t k);

}  // namespace netreconf
