#include "hmi/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <vector>

#include "hmi/error.hpp"

namespace hmi {

SparsePolynomial::SparsePolynomial(std::size_t p) : p_(p) {
  if (p == 0) throw Error("polynomial needs at least one variable");
}

SparsePolynomial SparsePolynomial::constant(std::size_t p, const Rational& value) {
  SparsePolynomial g(p);
  g.add_term(MultiIndex(p), value);
  return g;
}

SparsePolynomial SparsePolynomial::monomial(const MultiIndex& exponent, const Rational& coefficient) {
  SparsePolynomial g(exponent.size());
  g.add_term(exponent, coefficient);
  return g;
}

SparsePolynomial SparsePolynomial::variable(std::size_t p, std::size_t i) {
  return monomial(MultiIndex::unit(p, i));
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t p) : text_(text), p_(p) {}

  SparsePolynomial run() {
    SparsePolynomial out(p_);
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      SparsePolynomial term = parse_term();
      if (negative) term *= Rational(-1);
      out += term;
      skip();
      if (pos_ == text_.size()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
      negative = c == '-';
      ++pos_;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  BigInt parse_nat() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_small(const char* what) {
    std::size_t start = pos_;
    BigInt n = parse_nat();
    if (n > 10000) {
      pos_ = start;
      fail(std::string(what) + " too large");
    }
    return static_cast<int>(n);
  }

  SparsePolynomial parse_term() {
    Rational coeff = 1;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num = parse_nat();
      BigInt den = 1;
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = parse_nat();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      coeff = Rational(num, den);
      if (peek() != '*') return SparsePolynomial::constant(p_, coeff);
      ++pos_;
    }
    std::vector<int> exponent(p_, 0);
    while (need_factor) {
      skip();
      if (peek() != 'x') fail("expected variable x<n>");
      ++pos_;
      std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected variable number after 'x'");
      int index = parse_small("variable number");
      if (index < 1 || static_cast<std::size_t>(index) > p_) {
        pos_ = at;
        fail("variable x" + std::to_string(index) + " outside x1..x" + std::to_string(p_));
      }
      int power = 1;
      if (peek() == '^') {
        ++pos_;
        power = parse_small("exponent");
      }
      exponent[static_cast<std::size_t>(index - 1)] += power;
      need_factor = peek() == '*';
      if (need_factor) ++pos_;
    }
    return SparsePolynomial::monomial(MultiIndex(std::move(exponent)), coeff);
  }

  std::string_view text_;
  std::size_t p_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial SparsePolynomial::parse(std::string_view text, std::size_t p) {
  return PolyParser(text, p).run();
}

Rational SparsePolynomial::coefficient(const MultiIndex& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePolynomial::degree_in(std::size_t i) const {
  if (i < 1 || i > p_) throw Error("variable index " + std::to_string(i) + " out of range");
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e[i - 1]);
  return best;
}

int SparsePolynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e.manhattan_norm());
  return best;
}

void SparsePolynomial::add_term(const MultiIndex& exponent, const Rational& coefficient) {
  if (exponent.size() != p_) throw Error("exponent " + exponent.to_string() + " has the wrong dimension");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

void SparsePolynomial::check_dimension(const SparsePolynomial& other) const {
  if (other.p_ != p_)
    throw Error("polynomials in " + std::to_string(p_) + " and " + std::to_string(other.p_) + " variables");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  check_dimension(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  check_dimension(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  a.check_dimension(b);
  SparsePolynomial out(a.p_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

double SparsePolynomial::evaluate(std::span<const double> x) const {
  if (x.size() != p_) throw Error("evaluation point has the wrong dimension");
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double term = to_double(c);
    for (std::size_t i = 0; i < p_; ++i)
      if (e[i] > 0) term *= std::pow(x[i], e[i]);
    total += term;
  }
  return total;
}

Rational SparsePolynomial::evaluate(std::span<const Rational> x) const {
  if (x.size() != p_) throw Error("evaluation point has the wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < p_; ++i)
      for (int j = 0; j < e[i]; ++j) term *= x[i];
    total += term;
  }
  return total;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<MultiIndex, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = a.first.manhattan_norm();
    int db = b.first.manhattan_norm();
    return da != db ? da < db : a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : ordered) {
    bool negative = c < 0;
    Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < p_; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += "x" + std::to_string(i + 1);
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += hmi::to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += hmi::to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

SparsePolynomial differentiate(const SparsePolynomial& g, const MultiIndex& k) {
  if (k.size() != g.dimension())
    throw Error("derivative order " + k.to_string() + " does not match " +
                std::to_string(g.dimension()) + " variables");
  SparsePolynomial out(g.dimension());
  for (const auto& [e, c] : g.terms()) {
    if (!k.divides(e)) continue;
    Rational coeff = c;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (int j = 0; j < k[i]; ++j) coeff *= e[i] - j;
    out += SparsePolynomial::monomial(e - k, coeff);
  }
  return out;
}

}  // namespace hmi
