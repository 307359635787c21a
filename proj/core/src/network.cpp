#include "hmi/network.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hmi/error.hpp"

namespace hmi {

namespace {

// Nodes relabelled 0..n-1; adjacency as (neighbour, edge id) lists.
struct Indexed {
  int n = 0;
  int source = 0;
  int sink = 0;
  std::vector<std::vector<std::pair<int, int>>> adjacency;
};

Indexed index_network(const Network& network) {
  std::map<int, int> position;
  for (int v : network.nodes()) position.emplace(v, static_cast<int>(position.size()));
  Indexed g;
  g.n = static_cast<int>(position.size());
  g.source = position.at(network.input());
  g.sink = position.at(network.output());
  g.adjacency.resize(static_cast<std::size_t>(g.n));
  for (const NetworkEdge& e : network.edges()) {
    int a = position.at(e.u);
    int b = position.at(e.v);
    g.adjacency[static_cast<std::size_t>(a)].emplace_back(b, e.id);
    g.adjacency[static_cast<std::size_t>(b)].emplace_back(a, e.id);
  }
  return g;
}

void reach(const Indexed& g, int from, std::vector<bool>& seen) {
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, id] : g.adjacency[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(u)]) continue;
      seen[static_cast<std::size_t>(u)] = true;
      stack.push_back(u);
    }
  }
}

}  // namespace

Network::Network(std::vector<int> nodes, std::vector<NetworkEdge> edges, int input, int output)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), input_(input), output_(output) {
  std::set<int> node_set(nodes_.begin(), nodes_.end());
  if (node_set.size() != nodes_.size()) throw Error("network nodes must be distinct");
  if (nodes_.size() > static_cast<std::size_t>(kMaxNetworkNodes))
    throw Error("network has more than " + std::to_string(kMaxNetworkNodes) + " nodes");
  if (edges_.empty()) throw Error("network has no edges");
  if (edges_.size() > static_cast<std::size_t>(kMaxNetworkEdges))
    throw Error("network has more than " + std::to_string(kMaxNetworkEdges) + " edges");
  std::sort(edges_.begin(), edges_.end(), [](const NetworkEdge& a, const NetworkEdge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const NetworkEdge& e = edges_[i];
    if (e.id != static_cast<int>(i) + 1) throw Error("edge ids must be exactly 1.." + std::to_string(edges_.size()));
    if (!node_set.count(e.u) || !node_set.count(e.v))
      throw Error("edge " + std::to_string(e.id) + " uses an unknown node");
    if (e.u == e.v) throw Error("edge " + std::to_string(e.id) + " is a loop");
  }
  if (!node_set.count(input_) || !node_set.count(output_)) throw Error("input and output must be network nodes");
  if (input_ == output_) throw Error("input and output must differ");
  Indexed g = index_network(*this);
  std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
  reach(g, g.source, seen);
  if (!seen[static_cast<std::size_t>(g.sink)]) throw Error("input and output are disconnected");
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw Error("network is not connected");
}

std::vector<Face> minimal_paths(const Network& network) {
  Indexed g = index_network(network);
  std::vector<Face> paths;
  std::vector<bool> on_path(static_cast<std::size_t>(g.n), false);
  auto dfs = [&](auto&& self, int v, Face used) -> void {
    if (v == g.sink) {
      paths.push_back(used);
      return;
    }
    on_path[static_cast<std::size_t>(v)] = true;
    for (auto [u, id] : g.adjacency[static_cast<std::size_t>(v)])
      if (!on_path[static_cast<std::size_t>(u)]) self(self, u, used.with(id));
    on_path[static_cast<std::size_t>(v)] = false;
  };
  dfs(dfs, g.source, Face{});
  return minimal_elements(std::move(paths));
}

std::vector<Face> minimal_cuts(const Network& network) {
  Indexed g = index_network(network);
  // Every side X of a bipartition with the input in X and the output outside
  // gives the cut of crossing edges; the minimal cuts are among them.
  std::vector<int> free;
  for (int v = 0; v < g.n; ++v)
    if (v != g.source && v != g.sink) free.push_back(v);
  std::set<std::uint64_t> seen;
  std::vector<Face> cuts;
  std::vector<bool> side(static_cast<std::size_t>(g.n));
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << free.size()); ++choice) {
    std::fill(side.begin(), side.end(), false);
    side[static_cast<std::size_t>(g.source)] = true;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((choice >> i) & 1U) side[static_cast<std::size_t>(free[i])] = true;
    Face cut;
    for (int v = 0; v < g.n; ++v)
      for (auto [u, id] : g.adjacency[static_cast<std::size_t>(v)])
        if (side[static_cast<std::size_t>(v)] && !side[static_cast<std::size_t>(u)]) cut.insert(id);
    if (seen.insert(cut.mask()).second) cuts.push_back(cut);
  }
  return minimal_elements(std::move(cuts));
}

SquareFreeIdeal cut_ideal(const Network& network) {
  return SquareFreeIdeal(network.edge_count(), minimal_cuts(network));
}

SquareFreeIdeal path_ideal(const Network& network) {
  return SquareFreeIdeal(network.edge_count(), minimal_paths(network));
}

DualityReport verify_cut_path_duality(const Network& network) {
  DualityReport report;
  report.cut_complex = complex_of(cut_ideal(network));
  report.path_complex = complex_of(path_ideal(network));
  Face all = Face::range(network.edge_count());
  std::vector<Face> complements;
  for (Face path : minimal_paths(network)) complements.push_back(all - path);
  report.cut_facets_are_path_complements = report.cut_complex.facets() == maximal_elements(complements);
  SimplicialComplex dual = alexander_dual(report.cut_complex);
  report.dual_is_path_complex = dual == report.path_complex;
  report.dual_is_involution = alexander_dual(dual) == report.cut_complex;
  return report;
}

}  // namespace hmi
