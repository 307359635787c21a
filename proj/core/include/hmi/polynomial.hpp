#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "hmi/multi_index.hpp"
#include "hmi/rational.hpp"

namespace hmi {

// Polynomial in x_1..x_p with exact rational coefficients; zero
// coefficients are never stored.
class SparsePolynomial {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(std::size_t p);

  static SparsePolynomial constant(std::size_t p, const Rational& value);
  static SparsePolynomial monomial(const MultiIndex& exponent, const Rational& coefficient = 1);
  // x_i, 1-based.
  static SparsePolynomial variable(std::size_t p, std::size_t i);

  // Grammar (whitespace ignored):
  //   poly   := ['-'] term (('+'|'-') term)*
  //   term   := coeff | [coeff '*'] factor ('*' factor)*
  //   factor := 'x' NAT ['^' NAT]
  //   coeff  := INT ['/' INT]
  static SparsePolynomial parse(std::string_view text, std::size_t p);

  std::size_t dimension() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const MultiIndex& exponent) const;

  // Highest power of x_i (1-based); -1 for the zero polynomial.
  int degree_in(std::size_t i) const;
  int total_degree() const;

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Rational& scalar);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& s) { return a *= s; }

  double evaluate(std::span<const double> x) const;
  Rational evaluate(std::span<const Rational> x) const;

  // Graded: by total degree, then x1 before x2 within a degree.
  // "1 + 2*x1 + 3*x2 + 5*x1*x2", "1/2*x1^2 - x1*x3", "0".
  std::string to_string() const;

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  void add_term(const MultiIndex& exponent, const Rational& coefficient);
  void check_dimension(const SparsePolynomial& other) const;

  std::size_t p_ = 0;
  Terms terms_;
};

// D^k g, exact.
SparsePolynomial differentiate(const SparsePolynomial& g, const MultiIndex& k);

}  // namespace hmi
