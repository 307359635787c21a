#include "hmi/density.hpp"

#include <cmath>
#include <numbers>

#include "hmi/error.hpp"

namespace hmi {

double DensityOracle::log_at(std::span<const double> x) const {
  if (log_density) return log_density(x);
  double value = density(x);
  if (!(value > 0)) throw Error("density is not positive at the requested point");
  return std::log(value);
}

DensityOracle gaussian_density(const GaussianSpec& spec) {
  spec.validate(true);
  Eigen::LLT<Eigen::MatrixXd> llt(spec.precision);
  double log_det = 0;
  for (Eigen::Index i = 0; i < spec.precision.rows(); ++i) log_det += 2 * std::log(llt.matrixL()(i, i));
  double p = static_cast<double>(spec.dimension());
  double log_norm = 0.5 * log_det - 0.5 * p * std::log(2 * std::numbers::pi);
  Eigen::VectorXd mean = spec.mean;
  Eigen::MatrixXd precision = spec.precision;
  auto log_f = [mean, precision, log_norm](std::span<const double> x) {
    if (static_cast<Eigen::Index>(x.size()) != mean.size()) throw Error("point has the wrong dimension");
    Eigen::Map<const Eigen::VectorXd> point(x.data(), mean.size());
    Eigen::VectorXd d = point - mean;
    return log_norm - 0.5 * d.dot(precision * d);
  };
  DensityOracle oracle;
  oracle.dimension = spec.dimension();
  oracle.log_density = log_f;
  oracle.density = [log_f](std::span<const double> x) { return std::exp(log_f(x)); };
  oracle.description = "gaussian";
  return oracle;
}

DensityOracle mec_density(const MECSpec& spec, double lower, double upper, const IntegrationOptions& options) {
  SparsePolynomial g = mec_polynomial(spec);
  if (!(upper > lower)) throw Error("MEC box must have upper > lower");
  std::vector<double> lo(spec.p, lower);
  std::vector<double> hi(spec.p, upper);
  IntegrationOptions opts = options;
  if (spec.p > 4) opts.monte_carlo = true;
  std::vector<double> mass = integrate_box(
      lo, hi, 1, [&g](std::span<const double> x, double w, std::span<double> out) { out[0] += w * std::exp(g.evaluate(x)); },
      opts);
  if (!(mass[0] > 0) || !std::isfinite(mass[0])) throw Error("MEC density cannot be normalised on the box");
  double log_mass = std::log(mass[0]);
  auto log_f = [g, lower, upper, log_mass](std::span<const double> x) {
    for (double xi : x)
      if (xi < lower || xi > upper) throw Error("MEC density is zero outside its box");
    return g.evaluate(x) - log_mass;
  };
  DensityOracle oracle;
  oracle.dimension = spec.p;
  oracle.log_density = log_f;
  oracle.density = [log_f](std::span<const double> x) { return std::exp(log_f(x)); };
  oracle.description = "mec";
  return oracle;
}

double Univariate::log_density(double x) const {
  double z = (x - location) / scale;
  switch (kind) {
    case Kind::Normal:
      return -0.5 * z * z - std::log(scale) - 0.5 * std::log(2 * std::numbers::pi);
    case Kind::Logistic:
      // log(e^{-z} / (s (1 + e^{-z})^2)), written to avoid overflow for large |z|.
      return -std::abs(z) - 2 * std::log1p(std::exp(-std::abs(z))) - std::log(scale);
  }
  return 0;
}

DensityOracle product_density(std::vector<Univariate> factors) {
  if (factors.empty()) throw Error("product density needs at least one factor");
  for (const Univariate& u : factors)
    if (!(u.scale > 0)) throw Error("univariate scale must be positive");
  auto log_f = [factors](std::span<const double> x) {
    if (x.size() != factors.size()) throw Error("point has the wrong dimension");
    double total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) total += factors[i].log_density(x[i]);
    return total;
  };
  DensityOracle oracle;
  oracle.dimension = factors.size();
  oracle.log_density = log_f;
  oracle.density = [log_f](std::span<const double> x) { return std::exp(log_f(x)); };
  oracle.description = "product";
  return oracle;
}

}  // namespace hmi
