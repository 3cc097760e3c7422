#include "netreconf/network_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace netreconf {

using nlohmann::json;

std::string network_to_json(const Network& net, int indent) {
  json doc;
  doc["nodes"] = net.node_count();
  doc["root"] = net.root();
  json edges = json::array();
  for (const Edge& e : net.edges()) {
    edges.push_back({{"u", e.tail}, {"v", e.head}, {"r", e.resistance}});
  }
  doc["edges"] = std::move(edges);
  json demands = json::array();
  for (NodeId v = 0; v < net.node_count(); ++v)
    demands.push_back(v == net.root() ? 0.0 : net.demand(v));
  doc["demands"] = std::move(demands);
  return doc.dump(indent) + "\n";
}

Network network_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("instance is not valid JSON: ") + err.what());
  }
  try {
    const auto n = doc.at("nodes").get<std::size_t>();
    const auto root = doc.at("root").get<NodeId>();
    std::vector<Edge> edges;
    for (const json& item : doc.at("edges")) {
      edges.push_back({item.at("u").get<NodeId>(), item.at("v").get<NodeId>(),
                       item.at("r").get<double>()});
    }
    auto demands = doc.at("demands").get<std::vector<double>>();
    return Network(n, root, std::move(edges), std::move(demands));
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("malformed instance document: ") + err.what());
  }
}

Network read_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return network_from_json(buffer.str());
}

void write_network(const Network& net, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << network_to_json(net);
}

std::string tree_to_json(const Network& net, const RootedTree& tree, int indent) {
  json doc;
  doc["root"] = tree.root();
  doc["edges"] = std::vector<EdgeId>(tree.edges().begin(), tree.edges().end());
  json parent = json::array();
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (tree.parent(v) == kNoNode)
      parent.push_back(nullptr);
    else
      parent.push_back(tree.parent(v));
  }
  doc["parent"] = std::move(parent);
  doc["energy"] = tree_energy(net, tree);
  return doc.dump(indent) + "\n";
}

}  // namespace netreconf
