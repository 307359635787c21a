#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hmi {

// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule gauss_legendre(int n);

// Integrand returning several values at once; `out` has `width` slots and
// is accumulated into (+=) with the given weight already applied.
using VectorIntegrand = std::function<void(std::span<const double> x, double weight, std::span<double> out)>;

struct IntegrationOptions {
  int nodes = 16;
  int threads = 1;
  // Uniform sampling instead of the tensor grid.
  bool monte_carlo = false;
  std::uint64_t seed = 0;
  std::size_t samples = 200000;
};

// Integrates over the box prod [lower_i, upper_i]. The result does not depend
// on the thread count: partial sums are formed per outer grid node (or per
// fixed sample chunk) and reduced in a fixed order.
std::vector<double> integrate_box(std::span<const double> lower, std::span<const double> upper, std::size_t width,
                                  const VectorIntegrand& integrand, const IntegrationOptions& options = {});

}  // namespace hmi
