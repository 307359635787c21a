#pragma once

#include <vector>

#include "hmi/face.hpp"
#include "hmi/ideal.hpp"
#include "hmi/simplicial.hpp"

namespace hmi {

// Enumeration is exhaustive, so networks are kept small.
inline constexpr int kMaxNetworkEdges = 20;
inline constexpr int kMaxNetworkNodes = 24;

struct NetworkEdge {
  int id = 0;
  int u = 0;
  int v = 0;
};

// Undirected two-terminal network. Edge e_i carries variable x_i, ids are
// exactly 1..p; parallel edges are allowed.
class Network {
 public:
  Network(std::vector<int> nodes, std::vector<NetworkEdge> edges, int input, int output);

  const std::vector<int>& nodes() const noexcept { return nodes_; }
  // Sorted by id.
  const std::vector<NetworkEdge>& edges() const noexcept { return edges_; }
  int input() const noexcept { return input_; }
  int output() const noexcept { return output_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

 private:
  std::vector<int> nodes_;
  std::vector<NetworkEdge> edges_;
  int input_;
  int output_;
};

// Edge sets of the simple input-output paths, canonical order.
std::vector<Face> minimal_paths(const Network& network);
// Inclusion-minimal edge sets separating input from output, canonical order.
std::vector<Face> minimal_cuts(const Network& network);

SquareFreeIdeal cut_ideal(const Network& network);
SquareFreeIdeal path_ideal(const Network& network);

struct DualityReport {
  SimplicialComplex cut_complex;
  SimplicialComplex path_complex;
  // Facets of the cut complex are the complements of the minimal paths.
  bool cut_facets_are_path_complements = false;
  // The Alexander dual of the cut complex is the path complex.
  bool dual_is_path_complex = false;
  // (S*)* = S for the cut complex.
  bool dual_is_involution = false;

  bool ok() const { return cut_facets_are_path_complements && dual_is_path_complex && dual_is_involution; }
};

DualityReport verify_cut_path_duality(const Network& network);

}  // namespace hmi
