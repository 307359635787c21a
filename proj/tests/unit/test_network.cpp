#include <gtest/gtest.h>

#include <random>

#include "hmi/error.hpp"
#include "hmi/network.hpp"
#include "oracles.hpp"

using namespace hmi;

namespace {

Network bridge_network() {
  return Network({1, 2, 3, 4}, {{1, 1, 2}, {2, 2, 4}, {3, 2, 3}, {4, 1, 3}, {5, 3, 4}}, 1, 4);
}

std::vector<Face> faces(std::initializer_list<const char*> list) {
  std::vector<Face> out;
  for (const char* f : list) out.push_back(Face::parse(f));
  sort_canonical(out);
  return out;
}

struct RandomNetwork {
  Network network;
  std::vector<oracle::SimpleEdge> edges;
};

RandomNetwork random_network(std::mt19937_64& rng) {
  int n = 2 + static_cast<int>(rng() % 5);
  std::vector<oracle::SimpleEdge> edges;
  for (int v = 2; v <= n; ++v) edges.push_back({1 + static_cast<int>(rng() % static_cast<unsigned>(v - 1)), v});
  int extra = static_cast<int>(rng() % static_cast<unsigned>(9 - edges.size()));
  for (int e = 0; e < extra; ++e) {
    int u = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    if (u != v) edges.push_back({u, v});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<int> nodes(static_cast<std::size_t>(n));
  std::iota(nodes.begin(), nodes.end(), 1);
  std::vector<NetworkEdge> labelled;
  for (std::size_t i = 0; i < edges.size(); ++i) labelled.push_back({static_cast<int>(i) + 1, edges[i].u, edges[i].v});
  int input = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
  int output = input % n + 1;
  return {Network(nodes, labelled, input, output), edges};
}

}  // namespace

TEST(NetworkTest, BridgeNetwork) {
  auto g = bridge_network();
  EXPECT_EQ(minimal_cuts(g), faces({"14", "25", "135", "234"}));
  EXPECT_EQ(minimal_paths(g), faces({"12", "45", "135", "234"}));
  EXPECT_EQ(cut_ideal(g).to_string(), "x1*x4, x2*x5, x1*x3*x5, x2*x3*x4");
  EXPECT_EQ(path_ideal(g).to_string(), "x1*x2, x4*x5, x1*x3*x5, x2*x3*x4");
  auto report = verify_cut_path_duality(g);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.cut_complex.to_string(), "{15,24,123,345}");
  EXPECT_EQ(report.path_complex.to_string(), "{15,24,134,235}");
  // Facet 15 of the cut complex is the complement of the path 234.
  EXPECT_TRUE(report.cut_complex.is_face(Face::range(5) - Face::parse("234")));
}

TEST(NetworkTest, SeriesAndParallel) {
  Network series({1, 2, 3, 4}, {{1, 1, 2}, {2, 2, 3}, {3, 3, 4}}, 1, 4);
  EXPECT_EQ(minimal_cuts(series), faces({"1", "2", "3"}));
  EXPECT_EQ(minimal_paths(series), faces({"123"}));
  EXPECT_TRUE(verify_cut_path_duality(series).ok());

  Network parallel({1, 2}, {{1, 1, 2}, {2, 1, 2}}, 1, 2);
  EXPECT_EQ(minimal_paths(parallel), faces({"1", "2"}));
  EXPECT_EQ(minimal_cuts(parallel), faces({"12"}));
  EXPECT_EQ(cut_ideal(parallel).to_string(), "x1*x2");
  EXPECT_TRUE(verify_cut_path_duality(parallel).ok());
}

TEST(NetworkTest, Validation) {
  EXPECT_THROW(Network({1, 2}, {{1, 1, 1}}, 1, 2), Error);
  EXPECT_THROW(Network({1, 2}, {{2, 1, 2}}, 1, 2), Error);
  EXPECT_THROW(Network({1, 2, 3}, {{1, 1, 2}}, 1, 3), Error);
  EXPECT_THROW(Network({1, 2}, {{1, 1, 3}}, 1, 2), Error);
  EXPECT_THROW(Network({1, 1}, {{1, 1, 2}}, 1, 2), Error);
  EXPECT_THROW(Network({1, 2}, {{1, 1, 2}}, 1, 1), Error);
  std::vector<NetworkEdge> many;
  for (int i = 1; i <= kMaxNetworkEdges + 1; ++i) many.push_back({i, 1, 2});
  EXPECT_THROW(Network({1, 2}, many, 1, 2), Error);
}

TEST(NetworkTest, RandomNetworksAgainstBruteForce) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    auto [g, edges] = random_network(rng);
    auto cuts = minimal_cuts(g);
    auto paths = minimal_paths(g);
    EXPECT_EQ(cuts, oracle::minimal_connecting_sets(edges, g.input(), g.output(), true));
    EXPECT_EQ(paths, oracle::minimal_connecting_sets(edges, g.input(), g.output(), false));
    for (Face c : cuts)
      for (Face p : paths) EXPECT_TRUE(c.intersects(p));
    auto report = verify_cut_path_duality(g);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(alexander_dual(report.path_complex), report.cut_complex);
  }
}
