#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "netreconf/network_io.hpp"

using namespace netreconf;

TEST(NetworkJson, RoundTripIsByteStable) {
  const Network net = fixtures::sparsified(4, 5, 0.1, 3);
  const std::string text = network_to_json(net);
  const Network back = network_from_json(text);
  EXPECT_EQ(network_to_json(back), text);
  ASSERT_EQ(back.edge_count(), net.edge_count());
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    EXPECT_EQ(back.edge(e).tail, net.edge(e).tail);
    EXPECT_EQ(back.edge(e).resistance, net.edge(e).resistance);
  }
  for (NodeId v = 0; v < net.node_count(); ++v) EXPECT_EQ(back.demand(v), net.demand(v));
}

TEST(NetworkJson, ReadsHandWrittenDecimals) {
  const std::string text =
      R"({"nodes": 3, "root": 0, "edges": [{"u": 0, "v": 1, "r": 0.1}, {"u": 2, "v": 1, "r": 2.5}],)"
      R"( "demands": [7, 0.3, 1.25]})";
  const Network net = network_from_json(text);
  EXPECT_EQ(net.node_count(), 3u);
  EXPECT_EQ(net.edge(1).tail, 1u);
  EXPECT_EQ(net.edge(0).resistance, 0.1);
  EXPECT_DOUBLE_EQ(net.total_demand(), 1.55);
  const std::string canonical = network_to_json(net);
  EXPECT_EQ(network_to_json(network_from_json(canonical)), canonical);
  EXPECT_NE(canonical.find("0.1"), std::string::npos);
}

TEST(NetworkJson, RejectsMalformedInput) {
  EXPECT_THROW(network_from_json("{"), std::invalid_argument);
  EXPECT_THROW(network_from_json(R"({"nodes": 2, "root": 0, "edges": [], "demands": [0]})"), std::invalid_argument);
  EXPECT_THROW(network_from_json(R"({"nodes": 2, "root": 0, "edges": [{"u": 0, "v": 9, "r": 1}], "demands": [0, 1]})"),
               std::invalid_argument);
}

TEST(NetworkJson, FileRoundTrip) {
  const Network net = fixtures::cycle4();
  const auto path = std::filesystem::temp_directory_path() / "netreconf_io_test.json";
  write_network(net, path);
  const Network back = read_network(path);
  EXPECT_EQ(network_to_json(back), network_to_json(net));
  std::filesystem::remove(path);
}

TEST(TreeJson, ContainsEnergyAndParents) {
  const Network net = fixtures::path3();
  const std::vector<EdgeId> edges{0, 1};
  const std::string text = tree_to_json(net, RootedTree::from_edges(net, edges));
  EXPECT_NE(text.find("\"energy\": 13"), std::string::npos);
  EXPECT_NE(text.find("null"), std::string::npos);
}
