#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hmi/density.hpp"
#include "hmi/multi_index.hpp"
#include "hmi/quadrature.hpp"

namespace hmi {

// alpha_i = k_i mod 2.
MultiIndex parity_alpha(const MultiIndex& k);

// eps^{||k||_1^+} prod_{k_i even} 1/(k_i+1) prod_{k_i odd} 1/(k_i+2).
double r_factor(double eps, const MultiIndex& k);

// Componentwise parity agreement: the 2^p classes of equal differential
// moments.
bool same_moment_class(const MultiIndex& u, const MultiIndex& k);

// The cube A(xi, eps) = [xi - eps, xi + eps]^p; `half_width` is the eps of
// r(eps, k).
struct CubeWindow {
  std::vector<double> center;
  double half_width = 0;

  CubeWindow(std::vector<double> center, double half_width);
  // Cube of the given edge length, i.e. half-width edge/2.
  static CubeWindow from_edge(std::vector<double> center, double edge);

  double edge() const noexcept { return 2 * half_width; }
  std::vector<double> lower() const;
  std::vector<double> upper() const;
};

struct EstimateReport {
  std::string quantity;
  std::string method;
  MultiIndex k;
  std::vector<double> xi;
  double value = 0;
  // Everything needed to reproduce the number: steps, nodes, eps, seed...
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
};

struct FiniteDifferenceOptions {
  // Per-axis step h_i = relative_step * max(1, |xi_i|).
  double relative_step = 1e-3;
  bool richardson = true;
};

// D^alpha F(xi) for binary alpha by central differences, where F is any
// scalar function of the point.
double mixed_derivative(const std::function<double(std::span<const double>)>& fn, std::span<const double> xi,
                        const MultiIndex& alpha, const FiniteDifferenceOptions& options = {});

// m^xi_k = D^alpha f(xi) / f(xi), alpha = parity_alpha(k).
EstimateReport differential_moment(const DensityOracle& f, std::span<const double> xi, const MultiIndex& k,
                                   const FiniteDifferenceOptions& options = {});

enum class CumulantMethod { PartitionSum, LogDerivative };

// PartitionSum: the cumulant-from-moment formula over differential moments.
// LogDerivative: D^alpha log f(xi); equal to the former for binary k.
EstimateReport differential_cumulant(const DensityOracle& f, std::span<const double> xi, const MultiIndex& k,
                                     CumulantMethod method, const FiniteDifferenceOptions& options = {});

// m^A_k = int_A prod (x_i - xi_i)^{k_i} f / int_A f.
EstimateReport local_moment(const DensityOracle& f, const CubeWindow& window, const MultiIndex& k,
                            const IntegrationOptions& options = {});
// Several local moments sharing one pass over the grid.
std::vector<double> local_moments(const DensityOracle& f, const CubeWindow& window, std::span<const MultiIndex> ks,
                                  const IntegrationOptions& options = {});

// Partition sum over local moments; metadata carries kappa^A_k / r(eps, k).
EstimateReport local_cumulant(const DensityOracle& f, const CubeWindow& window, const MultiIndex& k,
                              const IntegrationOptions& options = {});

struct LimitProbeReport {
  MultiIndex k;
  std::vector<double> xi;
  std::vector<double> eps;
  // kappa^A_k / r(eps, k) per eps.
  std::vector<double> scaled;
  std::vector<double> errors;
  // kappa^xi_k from the partition-sum definition.
  double target = 0;
  bool converged = false;

  std::string verdict() const { return converged ? "CONVERGED" : "NOT-CONVERGED"; }
  nlohmann::ordered_json to_json() const;
};

// Converged when the last scaled value is within 5% of the target (relative
// to max(|target|, 1)) and the error shrinks at every one of at least three
// levels.
LimitProbeReport limit_matches_differential(const DensityOracle& f, std::span<const double> xi, const MultiIndex& k,
                                            std::span<const double> eps_sequence,
                                            const IntegrationOptions& integration = {},
                                            const FiniteDifferenceOptions& differences = {});

}  // namespace hmi
