#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "netreconf/network.hpp"

namespace netreconf {

/// Instance document:
///   {"nodes": n, "root": r, "edges": [{"u":..,"v":..,"r":..}, ...], "demands": [...]}
/// `demands` is indexed by node; the root entry is written as 0 and ignored on read.
/// Numbers are written in shortest round-trip form, so write(read(text)) is
/// byte-identical for any text this writer produced.
std::string network_to_json(const Network& net, int indent = 2);
Network network_from_json(std::string_view text);

Network read_network(const std::filesystem::path& path);
void write_network(const Network& net, const std::filesystem::path& path);

/// {"root": r, "edges": [...], "parent": [...], "energy": E}
std::string tree_to_json(const Network& net, const RootedTree& tree, int indent = 2);

}  // namespace netreconf
