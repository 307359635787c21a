#include "hmi/logdensity.hpp"

#include <cmath>

#include "hmi/error.hpp"

namespace hmi {

namespace {

Face support_of(const MultiIndex& e) {
  Face s;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) s.insert(static_cast<int>(i) + 1);
  return s;
}

}  // namespace

SparsePolynomial parse_poly(std::string_view text, std::size_t p) { return SparsePolynomial::parse(text, p); }

HierarchyVerdict check_hierarchical(const SparsePolynomial& g, const SimplicialComplex& complex) {
  if (static_cast<int>(g.dimension()) != complex.p())
    throw Error("polynomial in " + std::to_string(g.dimension()) + " variables against a complex on " +
                std::to_string(complex.p()) + " vertices");
  HierarchyVerdict verdict;
  std::vector<Face> nonfaces;
  bool computed = false;
  for (const auto& [e, c] : g.terms()) {
    Face support = support_of(e);
    if (complex.is_face(support)) continue;
    verdict.hierarchical = false;
    verdict.term = e;
    if (!computed) {
      nonfaces = minimal_nonfaces(complex);
      computed = true;
    }
    for (Face k : nonfaces) {
      if (k.subset_of(support)) {
        verdict.nonface = k;
        break;
      }
    }
    if (!verdict.nonface) {
      // A variable outside the ground set.
      verdict.nonface = Face{(support - complex.ground()).min_vertex()};
    }
    break;
  }
  return verdict;
}

bool is_hierarchical(const SparsePolynomial& g, const SimplicialComplex& complex) {
  return check_hierarchical(g, complex).hierarchical;
}

bool artinian_degree_check(const SparsePolynomial& g, const MultiIndex& n) {
  if (n.size() != g.dimension()) throw Error("Artinian exponents do not match the polynomial dimension");
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 1) throw Error("Artinian exponents must be at least 1");
    if (g.degree_in(i + 1) > n[i] - 1) return false;
  }
  return true;
}

bool total_degree_cumulant_check(const SparsePolynomial& g, int d) {
  if (d < 1) throw Error("cumulant order must be at least 1");
  return g.total_degree() <= d - 1;
}

void GaussianSpec::validate(bool require_pd) const {
  if (mean.size() == 0) throw Error("Gaussian needs at least one variable");
  if (precision.rows() != mean.size() || precision.cols() != mean.size())
    throw Error("precision matrix must be " + std::to_string(mean.size()) + "x" + std::to_string(mean.size()));
  if (!mean.allFinite() || !precision.allFinite()) throw Error("Gaussian parameters must be finite");
  double scale = std::max(1.0, precision.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < precision.rows(); ++i)
    for (Eigen::Index j = i + 1; j < precision.cols(); ++j)
      if (std::abs(precision(i, j) - precision(j, i)) > 1e-12 * scale)
        throw Error("precision matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ")");
  if (require_pd) {
    Eigen::LLT<Eigen::MatrixXd> llt(precision);
    if (llt.info() != Eigen::Success) throw Error("precision matrix is not positive definite");
  }
}

SquareFreeIdeal gaussian_ideal(const GaussianSpec& spec, double tolerance) {
  spec.validate();
  if (tolerance < 0) throw Error("tolerance must be non-negative");
  int p = static_cast<int>(spec.dimension());
  std::vector<Face> generators;
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j)
      if (std::abs(spec.precision(i - 1, j - 1)) <= tolerance) generators.push_back(Face{i, j});
  return SquareFreeIdeal(p, std::move(generators));
}

SparsePolynomial gaussian_log_polynomial(const GaussianSpec& spec) {
  spec.validate();
  std::size_t p = spec.dimension();
  std::vector<SparsePolynomial> centred;
  for (std::size_t i = 0; i < p; ++i)
    centred.push_back(SparsePolynomial::variable(p, i + 1) -
                      SparsePolynomial::constant(p, Rational(spec.mean(static_cast<Eigen::Index>(i)))));
  SparsePolynomial out(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      double lambda = spec.precision(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (lambda == 0) continue;
      out += (centred[i] * centred[j]) * (Rational(lambda) * Rational(-1, 2));
    }
  }
  return out;
}

void MECSpec::validate() const {
  if (p == 0) throw Error("MEC spec needs at least one variable");
  for (const auto& [s, a] : coeffs) {
    if (s.size() != p) throw Error("MEC index " + s.to_string() + " does not have " + std::to_string(p) + " entries");
    if (!s.is_binary()) throw Error("MEC index " + s.compact() + " is not binary");
  }
}

SparsePolynomial mec_polynomial(const MECSpec& spec) {
  spec.validate();
  SparsePolynomial g(spec.p);
  for (const auto& [s, a] : spec.coeffs) g += SparsePolynomial::monomial(s, a);
  return g;
}

SimplicialComplex mec_support_complex(const MECSpec& spec) {
  spec.validate();
  std::vector<Face> faces;
  for (const auto& [s, a] : spec.coeffs)
    if (a != 0) faces.push_back(support_of(s));
  return SimplicialComplex(Face::range(static_cast<int>(spec.p)), std::move(faces));
}

}  // namespace hmi
