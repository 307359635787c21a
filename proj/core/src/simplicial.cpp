#include "hmi/simplicial.hpp"

#include <algorithm>

#include "hmi/error.hpp"

namespace hmi {

SimplicialComplex::SimplicialComplex(Face ground, std::vector<Face> faces) : ground_(ground) {
  for (Face f : faces)
    if (!f.subset_of(ground))
      throw Error("face " + f.to_string() + " uses a vertex outside " + ground.to_string());
  facets_ = maximal_elements(std::move(faces));
}

SimplicialComplex SimplicialComplex::simplex(Face ground) { return SimplicialComplex(ground, {ground}); }

SimplicialComplex SimplicialComplex::void_complex(Face ground) { return SimplicialComplex(ground, {}); }

bool SimplicialComplex::is_face(Face face) const {
  for (Face f : facets_)
    if (face.subset_of(f)) return true;
  return false;
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<Face> out;
  for (Face f : facets_) {
    std::uint64_t full = f.mask();
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
      out.push_back(Face::from_mask(sub));
      if (sub == 0) break;
    }
  }
  sort_canonical(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string SimplicialComplex::to_string() const { return hmi::to_string(facets_); }

SimplicialComplex make_complex(int p, std::vector<Face> faces) {
  if (p < 1) throw Error("vertex count must be at least 1");
  return SimplicialComplex(Face::range(p), std::move(faces));
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
  // K is a non-face iff it meets the complement of every facet.
  std::vector<Face> complements;
  complements.reserve(complex.facets().size());
  for (Face f : complex.facets()) complements.push_back(complex.ground() - f);
  return minimal_transversals(complements);
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
  std::vector<Face> facets;
  for (Face k : minimal_nonfaces(complex)) facets.push_back(complex.ground() - k);
  return SimplicialComplex(complex.ground(), std::move(facets));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, Face keep) {
  std::vector<Face> facets;
  for (Face f : complex.facets()) facets.push_back(f & keep);
  return SimplicialComplex(complex.ground() & keep, std::move(facets));
}

bool is_subcomplex(const SimplicialComplex& inner, const SimplicialComplex& outer) {
  for (Face f : inner.facets())
    if (!outer.is_face(f)) return false;
  return true;
}

Graph one_skeleton(const SimplicialComplex& complex) {
  Graph g(complex.ground());
  for (Face f : complex.facets()) {
    std::vector<int> vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
  }
  return g;
}

SimplicialComplex flag_complex(const Graph& graph) {
  if (graph.vertices().empty()) return SimplicialComplex(Face{}, {Face{}});
  return SimplicialComplex(graph.vertices(), maximal_cliques(graph));
}

}  // namespace hmi
