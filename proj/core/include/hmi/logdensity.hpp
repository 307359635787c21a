#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "hmi/face.hpp"
#include "hmi/ideal.hpp"
#include "hmi/multi_index.hpp"
#include "hmi/polynomial.hpp"
#include "hmi/rational.hpp"
#include "hmi/simplicial.hpp"

namespace hmi {

SparsePolynomial parse_poly(std::string_view text, std::size_t p);

struct HierarchyVerdict {
  bool hierarchical = true;
  // On failure: a term whose support is not a face, and a minimal non-face
  // inside that support (D^K g is then not identically zero).
  std::optional<MultiIndex> term;
  std::optional<Face> nonface;
};

// log-density g is hierarchical for S iff every term's support is a face.
HierarchyVerdict check_hierarchical(const SparsePolynomial& g, const SimplicialComplex& complex);
bool is_hierarchical(const SparsePolynomial& g, const SimplicialComplex& complex);

// d^{n_i} g / dx_i^{n_i} = 0 for every i.
bool artinian_degree_check(const SparsePolynomial& g, const MultiIndex& n);

// D^alpha g = 0 for every |alpha| = d.
bool total_degree_cumulant_check(const SparsePolynomial& g, int d);

struct GaussianSpec {
  Eigen::VectorXd mean;
  // Inverse covariance.
  Eigen::MatrixXd precision;

  std::size_t dimension() const { return static_cast<std::size_t>(mean.size()); }
  // Shapes agree and the precision is symmetric; `require_pd` also checks
  // positive definiteness.
  void validate(bool require_pd = false) const;
};

// {x_i x_j : i < j, |Lambda_ij| <= tolerance}
SquareFreeIdeal gaussian_ideal(const GaussianSpec& spec, double tolerance = 0.0);

// -1/2 (x - mu)' Lambda (x - mu) with the doubles converted exactly.
SparsePolynomial gaussian_log_polynomial(const GaussianSpec& spec);

// Coefficients a_s of the multilinear g = sum_s a_s x^s, s binary.
struct MECSpec {
  std::size_t p = 0;
  std::map<MultiIndex, Rational> coeffs;

  void validate() const;
};

SparsePolynomial mec_polynomial(const MECSpec& spec);
// Generated by the supports of the s with a_s != 0.
SimplicialComplex mec_support_complex(const MECSpec& spec);

}  // namespace hmi
