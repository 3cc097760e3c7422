#pragma once

#include <filesystem>
#include <string>

#include "netreconf/network.hpp"

namespace netreconf {

/// Mixed-integer quadratic model of the reconfiguration problem in CPLEX LP
/// text format, with spanning-tree constraints from Martin's extended
/// formulation. Variables: f<e> (free flow), x<e> (edge chosen), and
/// z<e>_<o>_<u> for each edge, each of its two orientations o and each node u
/// off the edge. Rows: flow conservation per node, one cardinality row
/// (sum x = n - 1), x_e = z_e_0_u + z_e_1_u per (e, u), one degree row per
/// oriented edge, and -M x_e <= f_e <= M x_e with M the total demand.
std::string martin_lp_text(const Network& net);

/// Writes martin_lp_text(net); throws std::runtime_error if the file cannot be written.
void export_martin_lp(const Network& net, const std::filesystem::path& path);

}  // namespace netreconf
