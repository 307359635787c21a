#pragma once

#include <span>
#include <string>
#include <vector>

#include "hmi/face.hpp"
#include "hmi/graph.hpp"

namespace hmi {

// A simplicial complex stored by its facets over an explicit ground set of
// vertices (usually {1..p}). Ground vertices that lie in no facet are
// non-faces. Two degenerate complexes are representable: the void complex
// (no faces, no facets) and the empty complex (facet list {{}}).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Downward closure of `faces`; only the inclusion-maximal inputs are kept.
  SimplicialComplex(Face ground, std::vector<Face> faces);

  static SimplicialComplex simplex(Face ground);
  static SimplicialComplex void_complex(Face ground);

  Face ground() const noexcept { return ground_; }
  // Ambient vertex count, the largest ground label.
  int p() const noexcept { return ground_.max_vertex(); }
  const std::vector<Face>& facets() const noexcept { return facets_; }

  bool is_void() const noexcept { return facets_.empty(); }
  bool is_face(Face face) const;
  // Every face, canonical order. Exponential; meant for small complexes.
  std::vector<Face> faces() const;

  // {13,23}
  std::string to_string() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  Face ground_;
  std::vector<Face> facets_;
};

// Complex over {1..p}.
SimplicialComplex make_complex(int p, std::vector<Face> faces);

// Inclusion-minimal non-faces. The void complex gives {{}}.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

// Complements (within the ground set) of the non-faces.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

// Restriction to the vertices in `keep`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, Face keep);

bool is_subcomplex(const SimplicialComplex& inner, const SimplicialComplex& outer);

Graph one_skeleton(const SimplicialComplex& complex);

// Clique complex of the graph, over the graph's vertex set.
SimplicialComplex flag_complex(const Graph& graph);

}  // namespace hmi
