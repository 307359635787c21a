#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hmi/logdensity.hpp"
#include "hmi/quadrature.hpp"

namespace hmi {

// A strictly positive density on (a region of) R^p given by evaluators.
// Evaluators must be pure so the oracle can be queried from several threads.
struct DensityOracle {
  std::size_t dimension = 0;
  std::function<double(std::span<const double>)> density;
  // Optional closed form for log f; log(density) is used otherwise.
  std::function<double(std::span<const double>)> log_density;
  std::string description;

  double operator()(std::span<const double> x) const { return density(x); }
  double log_at(std::span<const double> x) const;
};

DensityOracle gaussian_density(const GaussianSpec& spec);

// exp(g) for the multilinear MEC log-density, normalised numerically over the
// box [lower, upper]^p and zero outside it.
DensityOracle mec_density(const MECSpec& spec, double lower, double upper,
                          const IntegrationOptions& options = {});

struct Univariate {
  enum class Kind { Normal, Logistic };
  Kind kind = Kind::Normal;
  double location = 0;
  double scale = 1;

  double log_density(double x) const;
};

// Independent coordinates.
DensityOracle product_density(std::vector<Univariate> factors);

}  // namespace hmi
