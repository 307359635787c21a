#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hmi/face.hpp"
#include "hmi/factorization.hpp"
#include "hmi/graph.hpp"
#include "hmi/multi_index.hpp"
#include "hmi/simplicial.hpp"

namespace hmi {

// Ideal generated by square-free monomials m_K = prod_{k in K} x_k, each
// stored as its support K, in the polynomial ring over `variables()`.
// Generators form an antichain. No generators is the zero ideal; the empty
// generator (the monomial 1) is the unit ideal.
class SquareFreeIdeal {
 public:
  SquareFreeIdeal() = default;
  SquareFreeIdeal(Face variables, std::vector<Face> generators);
  // Ring in x_1..x_p.
  SquareFreeIdeal(int p, std::vector<Face> generators);

  Face variables() const noexcept { return variables_; }
  int p() const noexcept { return variables_.max_vertex(); }
  const std::vector<Face>& generators() const noexcept { return generators_; }

  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_unit() const noexcept;
  // True iff some generator divides the monomial with this support.
  bool contains(Face support) const;
  // Membership of x^k for an arbitrary exponent vector; only its support
  // matters since the ideal is square-free.
  bool contains(const MultiIndex& exponent) const;

  // "x1*x4, x1*x5, x2*x5"; "0" for the zero ideal, "1" for the unit ideal.
  std::string to_string() const;

  friend bool operator==(const SquareFreeIdeal&, const SquareFreeIdeal&) = default;

 private:
  Face variables_;
  std::vector<Face> generators_;
};

// "x1*x2" -> {1,2}; "1" -> {}.
Face parse_monomial(std::string_view text);
// Comma separated monomials, "0" for none.
SquareFreeIdeal parse_ideal(std::string_view text, int p);

SquareFreeIdeal stanley_reisner(const SimplicialComplex& complex);
SimplicialComplex complex_of(const SquareFreeIdeal& ideal);

// For an ideal generated in degree 2: the graph on the variables whose
// edges are the generators.
Graph generator_graph(const SquareFreeIdeal& ideal);

using ChordalityTest = std::function<bool(const Graph&)>;

// Every generator has degree two and the graph of non-generator pairs is
// chordal. `chordal` defaults to maximum cardinality search.
bool has_2linear_resolution(const SquareFreeIdeal& ideal, const ChordalityTest& chordal = {});

struct FerrerShape {
  std::vector<int> rows;
  // Columns in table order; isolated variables come last as empty columns.
  std::vector<int> columns;
  // Row i uses exactly the first lambda[i] columns.
  std::vector<int> lambda;

  Face variables() const;
  // The degree-2 ideal the table describes.
  SquareFreeIdeal ideal() const;
};

std::optional<FerrerShape> recognize_ferrer(const SquareFreeIdeal& ideal);

// Maximal cliques of the complement of the Ferrer graph, read off the table
// row by row, followed by the all-columns clique.
Factorization ferrer_cliques(const FerrerShape& shape);

}  // namespace hmi
