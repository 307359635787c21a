#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmi/error.hpp"
#include "hmi/face.hpp"
#include "hmi/factorization.hpp"
#include "hmi/ideal.hpp"
#include "hmi/multi_index.hpp"
#include "hmi/simplicial.hpp"

namespace hmi {

// Why a complex is not decomposable: either it is not the clique complex of
// its 1-skeleton (a minimal non-face of size other than two), or the
// skeleton has a chordless cycle.
struct DecompositionWitness {
  enum class Kind { NonFlagFace, ChordlessCycle };
  Kind kind = Kind::NonFlagFace;
  Face nonface;
  std::vector<int> cycle;

  std::string to_string() const;
};

class NotDecomposableError : public Error {
 public:
  explicit NotDecomposableError(DecompositionWitness witness);
  const DecompositionWitness& witness() const noexcept { return witness_; }

 private:
  DecompositionWitness witness_;
};

std::optional<DecompositionWitness> decomposition_witness(const SimplicialComplex& complex);
bool is_decomposable(const SimplicialComplex& complex);

// Maximal cliques in a perfect order with their separators. The order comes
// from maximum cardinality search on the 1-skeleton; `tie_priority` is as
// for maximum_cardinality_search.
Factorization factorize(const SimplicialComplex& complex, std::span<const int> tie_priority = {});

// Remove the vertices J, which must lie in exactly one facet. The result
// lives on the ground set minus J.
SimplicialComplex marginalize(const SimplicialComplex& complex, Face strip);
// Drop every generator involving a variable of J and remove J from the ring.
SquareFreeIdeal ideal_marginalize(const SquareFreeIdeal& ideal, Face strip);

// X_I independent of X_J given X_K, with I, J, K partitioning {1..p}.
struct CIStatement {
  int p = 0;
  Face i;
  Face j;
  Face k;

  CIStatement(int p, Face i, Face j, Face k);
  std::string to_string() const;
};

// {e_i + e_j : i in I, j in J}, lexicographically descending.
std::vector<MultiIndex> ci_to_generators(const CIStatement& statement);

// Every e_i + e_j with i < j.
std::vector<MultiIndex> pairwise_generators(int p);

}  // namespace hmi
