#include "hmi/hierarchy.hpp"

#include <algorithm>

namespace hmi {

std::string DecompositionWitness::to_string() const {
  if (kind == Kind::NonFlagFace)
    return "minimal non-face {" + nonface.to_string() + "} is not an edge";
  std::string out = "chordless cycle ";
  for (std::size_t i = 0; i < cycle.size(); ++i) out += (i ? "-" : "") + std::to_string(cycle[i]);
  return out;
}

NotDecomposableError::NotDecomposableError(DecompositionWitness witness)
    : Error("not decomposable: " + witness.to_string()), witness_(std::move(witness)) {}

std::optional<DecompositionWitness> decomposition_witness(const SimplicialComplex& complex) {
  for (Face k : minimal_nonfaces(complex)) {
    if (k.size() != 2) {
      DecompositionWitness w;
      w.kind = DecompositionWitness::Kind::NonFlagFace;
      w.nonface = k;
      return w;
    }
  }
  if (auto cycle = find_chordless_cycle(one_skeleton(complex))) {
    DecompositionWitness w;
    w.kind = DecompositionWitness::Kind::ChordlessCycle;
    w.cycle = std::move(*cycle);
    return w;
  }
  return std::nullopt;
}

bool is_decomposable(const SimplicialComplex& complex) {
  for (Face k : minimal_nonfaces(complex))
    if (k.size() != 2) return false;
  return is_chordal(one_skeleton(complex));
}

Factorization factorize(const SimplicialComplex& complex, std::span<const int> tie_priority) {
  if (auto witness = decomposition_witness(complex)) throw NotDecomposableError(std::move(*witness));
  Graph skeleton = one_skeleton(complex);
  std::vector<int> order = maximum_cardinality_search(skeleton, tie_priority);
  std::vector<Face> candidates;
  Face visited;
  for (int v : order) {
    candidates.push_back((skeleton.neighbors(v) & visited).with(v));
    visited.insert(v);
  }
  std::vector<Face> cliques;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
      dominated = j != i && candidates[i].subset_of(candidates[j]);
    if (!dominated) cliques.push_back(candidates[i]);
  }
  return with_separators(std::move(cliques));
}

SimplicialComplex marginalize(const SimplicialComplex& complex, Face strip) {
  if (strip.empty()) throw Error("nothing to marginalize");
  if (!strip.subset_of(complex.ground()))
    throw Error("vertices {" + (strip - complex.ground()).to_string() + "} are not in the complex");
  int meeting = 0;
  bool inside = false;
  for (Face f : complex.facets()) {
    if (!f.intersects(strip)) continue;
    ++meeting;
    inside = strip.subset_of(f);
  }
  if (meeting != 1 || !inside)
    throw Error("{" + strip.to_string() + "} is not a facet of a unique maximal clique");
  return induced_subcomplex(complex, complex.ground() - strip);
}

SquareFreeIdeal ideal_marginalize(const SquareFreeIdeal& ideal, Face strip) {
  if (!strip.subset_of(ideal.variables()))
    throw Error("variables {" + (strip - ideal.variables()).to_string() + "} are not in the ring");
  std::vector<Face> kept;
  for (Face g : ideal.generators())
    if (!g.intersects(strip)) kept.push_back(g);
  return SquareFreeIdeal(ideal.variables() - strip, std::move(kept));
}

CIStatement::CIStatement(int p_, Face i_, Face j_, Face k_) : p(p_), i(i_), j(j_), k(k_) {
  if (p < 1) throw Error("p must be at least 1");
  if (i.empty() || j.empty()) throw Error("I and J must be non-empty");
  if (i.intersects(j) || i.intersects(k) || j.intersects(k)) throw Error("I, J, K must be disjoint");
  if ((i | j | k) != Face::range(p)) throw Error("I, J, K must cover 1.." + std::to_string(p));
}

std::string CIStatement::to_string() const {
  return "X{" + i.to_string() + "} _||_ X{" + j.to_string() + "} | X" +
         (k.empty() ? std::string("{}") : "{" + k.to_string() + "}");
}

std::vector<MultiIndex> ci_to_generators(const CIStatement& statement) {
  std::vector<MultiIndex> out;
  auto p = static_cast<std::size_t>(statement.p);
  for (int a : statement.i.vertices())
    for (int b : statement.j.vertices())
      out.push_back(MultiIndex::unit(p, static_cast<std::size_t>(a)) +
                    MultiIndex::unit(p, static_cast<std::size_t>(b)));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<MultiIndex> pairwise_generators(int p) {
  std::vector<MultiIndex> out;
  auto n = static_cast<std::size_t>(p);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b) out.push_back(MultiIndex::unit(n, a) + MultiIndex::unit(n, b));
  return out;
}

}  // namespace hmi
