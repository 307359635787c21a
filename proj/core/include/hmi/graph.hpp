#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hmi/face.hpp"

namespace hmi {

// Simple undirected graph on a vertex set drawn from {1..64}, adjacency as
// bit sets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Face vertices);
  // Vertices 1..n.
  static Graph on(int n);

  Face vertices() const noexcept { return vertices_; }
  int order() const noexcept { return vertices_.size(); }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  Face neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  bool is_clique(Face set) const;
  Graph induced(Face keep) const;
  // Same vertex set, edges exactly where this graph has none.
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Face vertices_;
  std::vector<Face> adjacency_ = std::vector<Face>(kMaxVertices + 1);
};

// Maximum cardinality search. Returns the visit order; ties between vertices
// with the same number of visited neighbours go to the lowest
// `tie_priority[v]` (indexed by vertex label), or to the lowest label when
// no priorities are supplied. The reverse of the visit order is a perfect
// elimination ordering iff the graph is chordal.
std::vector<int> maximum_cardinality_search(const Graph& graph,
                                            std::span<const int> tie_priority = {});

// Tarjan-Yannakakis check that `visit_order` (earliest first) reversed is a
// perfect elimination ordering.
bool is_perfect_elimination_order(const Graph& graph, std::span<const int> visit_order);

bool is_chordal(const Graph& graph);

// An induced cycle of length >= 4 as a vertex sequence, or nullopt when the
// graph is chordal.
std::optional<std::vector<int>> find_chordless_cycle(const Graph& graph);

// Bron-Kerbosch with pivoting; canonical order. Isolated vertices are
// returned as singleton cliques.
std::vector<Face> maximal_cliques(const Graph& graph);

}  // namespace hmi
