#include "hmi/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "hmi/error.hpp"

namespace hmi {

Graph::Graph(Face vertices) : vertices_(vertices) {}

Graph Graph::on(int n) { return Graph(Face::range(n)); }

void Graph::add_edge(int u, int v) {
  if (u == v) throw Error("self-loop on vertex " + std::to_string(u));
  if (!vertices_.contains(u) || !vertices_.contains(v))
    throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) + " leaves the vertex set");
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  return adjacency_[u].contains(v);
}

Face Graph::neighbors(int v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u : vertices_.vertices())
    for (int v : adjacency_[u].vertices())
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int u : vertices_.vertices()) twice += static_cast<std::size_t>(adjacency_[u].size());
  return twice / 2;
}

bool Graph::is_clique(Face set) const {
  for (int v : set.vertices())
    if (!(set.without(v)).subset_of(adjacency_[v])) return false;
  return true;
}

Graph Graph::induced(Face keep) const {
  Graph g(vertices_ & keep);
  for (int v : g.vertices_.vertices()) g.adjacency_[v] = adjacency_[v] & g.vertices_;
  return g;
}

Graph Graph::complement() const {
  Graph g(vertices_);
  for (int v : vertices_.vertices()) g.adjacency_[v] = (vertices_ - adjacency_[v]).without(v);
  return g;
}

std::vector<int> maximum_cardinality_search(const Graph& graph, std::span<const int> tie_priority) {
  std::vector<int> weight(kMaxVertices + 1, 0);
  Face unvisited = graph.vertices();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(graph.order()));
  auto priority = [&](int v) {
    return tie_priority.empty() ? v : tie_priority[static_cast<std::size_t>(v)];
  };
  while (!unvisited.empty()) {
    int best = 0;
    for (int v : unvisited.vertices()) {
      if (best == 0 || weight[v] > weight[best] ||
          (weight[v] == weight[best] && priority(v) < priority(best)))
        best = v;
    }
    order.push_back(best);
    unvisited.erase(best);
    for (int u : (graph.neighbors(best) & unvisited).vertices()) ++weight[u];
  }
  return order;
}

bool is_perfect_elimination_order(const Graph& graph, std::span<const int> visit_order) {
  std::vector<int> position(kMaxVertices + 1, -1);
  for (std::size_t i = 0; i < visit_order.size(); ++i) position[visit_order[i]] = static_cast<int>(i);
  Face visited;
  for (int v : visit_order) {
    Face earlier = graph.neighbors(v) & visited;
    if (earlier.size() >= 2) {
      int latest = 0;
      for (int u : earlier.vertices())
        if (latest == 0 || position[u] > position[latest]) latest = u;
      if (!earlier.without(latest).subset_of(graph.neighbors(latest))) return false;
    }
    visited.insert(v);
  }
  return true;
}

bool is_chordal(const Graph& graph) {
  return is_perfect_elimination_order(graph, maximum_cardinality_search(graph));
}

std::optional<std::vector<int>> find_chordless_cycle(const Graph& graph) {
  // A chordless cycle of length >= 4 through v enters and leaves v via two
  // non-adjacent neighbours a, c; the rest of the cycle is a shortest a-c
  // path avoiding v's other neighbours.
  for (int v : graph.vertices().vertices()) {
    std::vector<int> nbrs = graph.neighbors(v).vertices();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        int a = nbrs[i];
        int c = nbrs[j];
        if (graph.adjacent(a, c)) continue;
        Face allowed = (graph.vertices() - graph.neighbors(v)).without(v).with(a).with(c);
        std::vector<int> parent(kMaxVertices + 1, 0);
        std::deque<int> queue{a};
        parent[a] = a;
        while (!queue.empty() && parent[c] == 0) {
          int x = queue.front();
          queue.pop_front();
          for (int y : (graph.neighbors(x) & allowed).vertices()) {
            if (parent[y] != 0) continue;
            parent[y] = x;
            queue.push_back(y);
          }
        }
        if (parent[c] == 0) continue;
        std::vector<int> cycle{v};
        std::vector<int> path;
        for (int x = c; x != a; x = parent[x]) path.push_back(x);
        path.push_back(a);
        std::reverse(path.begin(), path.end());
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

namespace {

void bron_kerbosch(const Graph& graph, Face r, Face p, Face x, std::vector<Face>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = 0;
  int best = -1;
  for (int u : (p | x).vertices()) {
    int score = (p & graph.neighbors(u)).size();
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (int v : (p - graph.neighbors(pivot)).vertices()) {
    Face nv = graph.neighbors(v);
    bron_kerbosch(graph, r.with(v), p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<Face> maximal_cliques(const Graph& graph) {
  std::vector<Face> out;
  if (graph.vertices().empty()) return out;
  bron_kerbosch(graph, Face{}, graph.vertices(), Face{}, out);
  sort_canonical(out);
  return out;
}

}  // namespace hmi
