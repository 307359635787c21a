#include "hmi/diffcum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hmi/error.hpp"
#include "hmi/partitions.hpp"

namespace hmi {

MultiIndex parity_alpha(const MultiIndex& k) {
  std::vector<int> alpha(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) alpha[i] = k[i] % 2;
  return MultiIndex(std::move(alpha));
}

double r_factor(double eps, const MultiIndex& k) {
  if (!(eps > 0)) throw Error("eps must be positive");
  double r = std::pow(eps, k.plus_norm());
  for (std::size_t i = 0; i < k.size(); ++i) r /= k[i] % 2 == 0 ? k[i] + 1 : k[i] + 2;
  return r;
}

bool same_moment_class(const MultiIndex& u, const MultiIndex& k) {
  if (u.size() != k.size()) throw Error("multi-indices of different dimension");
  for (std::size_t i = 0; i < u.size(); ++i)
    if ((u[i] - k[i]) % 2 != 0) return false;
  return true;
}

CubeWindow::CubeWindow(std::vector<double> c, double h) : center(std::move(c)), half_width(h) {
  if (center.empty()) throw Error("window centre needs at least one coordinate");
  if (!(half_width > 0)) throw Error("eps must be positive");
}

CubeWindow CubeWindow::from_edge(std::vector<double> c, double edge) { return CubeWindow(std::move(c), edge / 2); }

std::vector<double> CubeWindow::lower() const {
  std::vector<double> out = center;
  for (double& x : out) x -= half_width;
  return out;
}

std::vector<double> CubeWindow::upper() const {
  std::vector<double> out = center;
  for (double& x : out) x += half_width;
  return out;
}

nlohmann::ordered_json EstimateReport::to_json() const {
  nlohmann::ordered_json j;
  j["quantity"] = quantity;
  j["method"] = method;
  j["k"] = std::vector<int>(k.entries().begin(), k.entries().end());
  j["xi"] = xi;
  j["value"] = value;
  j["metadata"] = metadata;
  return j;
}

namespace {

void check_point(const DensityOracle& f, std::span<const double> xi, const MultiIndex& k) {
  if (xi.size() != f.dimension)
    throw Error("point has " + std::to_string(xi.size()) + " coordinates, density has " +
                std::to_string(f.dimension));
  if (k.size() != f.dimension) throw Error("index " + k.to_string() + " does not match the density dimension");
}

double central_difference(const std::function<double(std::span<const double>)>& fn, std::span<const double> xi,
                          const std::vector<std::size_t>& axes, const std::vector<double>& steps) {
  std::size_t m = axes.size();
  std::vector<double> x(xi.begin(), xi.end());
  double total = 0;
  for (std::uint32_t signs = 0; signs < (1U << m); ++signs) {
    double sign = 1;
    for (std::size_t a = 0; a < m; ++a) {
      bool minus = (signs >> a) & 1U;
      x[axes[a]] = xi[axes[a]] + (minus ? -steps[a] : steps[a]);
      if (minus) sign = -sign;
    }
    total += sign * fn(x);
  }
  for (double h : steps) total /= 2 * h;
  return total;
}

}  // namespace

double mixed_derivative(const std::function<double(std::span<const double>)>& fn, std::span<const double> xi,
                        const MultiIndex& alpha, const FiniteDifferenceOptions& options) {
  if (!alpha.is_binary()) throw Error("finite differences are only taken for binary orders");
  if (!(options.relative_step > 0)) throw Error("finite-difference step must be positive");
  std::vector<std::size_t> axes;
  std::vector<double> steps;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    axes.push_back(i);
    steps.push_back(options.relative_step * std::max(1.0, std::abs(xi[i])));
  }
  if (axes.empty()) return fn(xi);
  double coarse = central_difference(fn, xi, axes, steps);
  if (!options.richardson) return coarse;
  for (double& h : steps) h /= 2;
  double fine = central_difference(fn, xi, axes, steps);
  return (4 * fine - coarse) / 3;
}

namespace {

nlohmann::ordered_json fd_metadata(std::span<const double> xi, const MultiIndex& alpha,
                                   const FiniteDifferenceOptions& options) {
  nlohmann::ordered_json meta;
  meta["alpha"] = std::vector<int>(alpha.entries().begin(), alpha.entries().end());
  std::vector<double> steps;
  for (double x : xi) steps.push_back(options.relative_step * std::max(1.0, std::abs(x)));
  meta["steps"] = steps;
  meta["richardson"] = options.richardson;
  return meta;
}

// D^alpha f(xi) / f(xi), with f rescaled by f(xi) so samples stay O(1).
double moment_ratio(const DensityOracle& f, std::span<const double> xi, const MultiIndex& alpha,
                    const FiniteDifferenceOptions& options) {
  double log_centre = f.log_at(xi);
  auto scaled = [&](std::span<const double> x) {
    double value = f(x);
    if (!(value > 0)) throw Error("non-positive density sample encountered");
    return std::exp(std::log(value) - log_centre);
  };
  return mixed_derivative(scaled, xi, alpha, options);
}

}  // namespace

EstimateReport differential_moment(const DensityOracle& f, std::span<const double> xi, const MultiIndex& k,
                                   const FiniteDifferenceOptions& options) {
  check_point(f, xi, k);
  MultiIndex alpha = parity_alpha(k);
  EstimateReport report;
  report.quantity = "differential-moment";
  report.k = k;
  report.xi.assign(xi.begin(), xi.end());
  if (!(f(xi) > 0)) throw Error("non-positive density sample encountered");
  if (alpha.is_zero()) {
    report.method = "exact";
    report.value = 1;
    report.metadata["alpha"] = std::vector<int>(alpha.entries().begin(), alpha.entries().end());
    return report;
  }
  report.method = "finite-difference";
  report.value = moment_ratio(f, xi, alpha, options);
  report.metadata = fd_metadata(xi, alpha, options);
  return report;
}

EstimateReport differential_cumulant(const DensityOracle& f, std::span<const double> xi, const MultiIndex& k,
                                     CumulantMethod method, const FiniteDifferenceOptions& options) {
  check_point(f, xi, k);
  if (k.is_zero()) throw Error("cumulant order must be non-zero");
  MultiIndex alpha = parity_alpha(k);
  EstimateReport report;
  report.quantity = "differential-cumulant";
  report.k = k;
  report.xi.assign(xi.begin(), xi.end());
  if (method == CumulantMethod::LogDerivative) {
    report.method = "log-derivative";
    report.value = mixed_derivative([&](std::span<const double> x) { return f.log_at(x); }, xi, alpha, options);
    report.metadata = fd_metadata(xi, alpha, options);
    report.metadata["binary"] = k.is_binary();
    return report;
  }
  report.method = "partition-sum";
  std::map<MultiIndex, double> by_parity;
  report.value = cumulant_partition_sum<double>(k, [&](const MultiIndex& block) {
    MultiIndex a = parity_alpha(block);
    auto it = by_parity.find(a);
    if (it == by_parity.end())
      it = by_parity.emplace(a, a.is_zero() ? 1.0 : moment_ratio(f, xi, a, options)).first;
    return it->second;
  });
  report.metadata = fd_metadata(xi, alpha, options);
  report.metadata["binary"] = k.is_binary();
  return report;
}

std::vector<double> local_moments(const DensityOracle& f, const CubeWindow& window, std::span<const MultiIndex> ks,
                                  const IntegrationOptions& options) {
  if (window.center.size() != f.dimension) throw Error("window dimension does not match the density");
  for (const MultiIndex& k : ks)
    if (k.size() != f.dimension) throw Error("index " + k.to_string() + " does not match the density dimension");
  std::vector<double> lower = window.lower();
  std::vector<double> upper = window.upper();
  const std::vector<double>& centre = window.center;
  double log_centre = f.log_at(centre);
  std::size_t p = f.dimension;
  auto integrand = [&](std::span<const double> x, double weight, std::span<double> out) {
    double value = f(x);
    if (!(value > 0)) throw Error("quadrature encountered a non-positive density value");
    double w = weight * std::exp(std::log(value) - log_centre);
    out[0] += w;
    for (std::size_t j = 0; j < ks.size(); ++j) {
      double term = w;
      for (std::size_t i = 0; i < p; ++i)
        for (int e = 0; e < ks[j][i]; ++e) term *= x[i] - centre[i];
      out[j + 1] += term;
    }
  };
  std::vector<double> sums = integrate_box(lower, upper, ks.size() + 1, integrand, options);
  std::vector<double> out;
  for (std::size_t j = 0; j < ks.size(); ++j) out.push_back(sums[j + 1] / sums[0]);
  return out;
}

namespace {

nlohmann::ordered_json quadrature_metadata(const CubeWindow& window, const IntegrationOptions& options) {
  nlohmann::ordered_json meta;
  meta["eps"] = window.half_width;
  meta["window"] = "half-width";
  if (options.monte_carlo) {
    meta["samples"] = options.samples;
    meta["seed"] = options.seed;
  } else {
    meta["nodes"] = options.nodes;
  }
  return meta;
}

}  // namespace

EstimateReport local_moment(const DensityOracle& f, const CubeWindow& window, const MultiIndex& k,
                            const IntegrationOptions& options) {
  EstimateReport report;
  report.quantity = "local-moment";
  report.method = options.monte_carlo ? "monte-carlo" : "tensor-quadrature";
  report.k = k;
  report.xi = window.center;
  report.value = local_moments(f, window, std::span<const MultiIndex>(&k, 1), options).front();
  report.metadata = quadrature_metadata(window, options);
  double r = r_factor(window.half_width, k);
  report.metadata["r"] = r;
  report.metadata["scaled"] = report.value / r;
  return report;
}

EstimateReport local_cumulant(const DensityOracle& f, const CubeWindow& window, const MultiIndex& k,
                              const IntegrationOptions& options) {
  if (k.is_zero()) throw Error("cumulant order must be non-zero");
  std::vector<MultiIndex> blocks;
  for_each_partition(k, [&](const Partition& partition) {
    for (const MultiIndex& b : partition.blocks)
      if (std::find(blocks.begin(), blocks.end(), b) == blocks.end()) blocks.push_back(b);
  });
  std::vector<double> values = local_moments(f, window, blocks, options);
  std::map<MultiIndex, double> moments;
  for (std::size_t i = 0; i < blocks.size(); ++i) moments.emplace(blocks[i], values[i]);
  EstimateReport report;
  report.quantity = "local-cumulant";
  report.method = options.monte_carlo ? "monte-carlo" : "tensor-quadrature";
  report.k = k;
  report.xi = window.center;
  report.value = cumulant_partition_sum<double>(k, [&](const MultiIndex& b) { return moments.at(b); });
  report.metadata = quadrature_metadata(window, options);
  double r = r_factor(window.half_width, k);
  report.metadata["r"] = r;
  report.metadata["scaled"] = report.value / r;
  return report;
}

nlohmann::ordered_json LimitProbeReport::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = std::vector<int>(k.entries().begin(), k.entries().end());
  j["xi"] = xi;
  j["target"] = target;
  j["eps"] = eps;
  j["scaled"] = scaled;
  j["errors"] = errors;
  j["verdict"] = verdict();
  return j;
}

LimitProbeReport limit_matches_differential(const DensityOracle& f, std::span<const double> xi, const MultiIndex& k,
                                            std::span<const double> eps_sequence,
                                            const IntegrationOptions& integration,
                                            const FiniteDifferenceOptions& differences) {
  if (eps_sequence.size() < 3) throw Error("limit probe needs at least three eps values");
  for (std::size_t i = 1; i < eps_sequence.size(); ++i)
    if (!(eps_sequence[i] < eps_sequence[i - 1])) throw Error("eps sequence must be strictly decreasing");
  LimitProbeReport report;
  report.k = k;
  report.xi.assign(xi.begin(), xi.end());
  report.target = differential_cumulant(f, xi, k, CumulantMethod::PartitionSum, differences).value;
  for (double eps : eps_sequence) {
    EstimateReport local = local_cumulant(f, CubeWindow(report.xi, eps), k, integration);
    double scaled = local.metadata["scaled"].get<double>();
    report.eps.push_back(eps);
    report.scaled.push_back(scaled);
    report.errors.push_back(std::abs(scaled - report.target));
  }
  constexpr double kNoiseFloor = 1e-9;
  bool shrinking = true;
  for (std::size_t i = 1; i < report.errors.size(); ++i)
    if (report.errors[i] > report.errors[i - 1] && report.errors[i] > kNoiseFloor) shrinking = false;
  double tolerance = 0.05 * std::max(std::abs(report.target), 1.0);
  report.converged = shrinking && report.errors.back() <= tolerance;
  return report;
}

}  // namespace hmi
