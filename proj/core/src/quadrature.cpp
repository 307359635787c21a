#include "hmi/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <exception>
#include <random>
#include <thread>

#include "hmi/error.hpp"

namespace hmi {

QuadratureRule gauss_legendre(int n) {
  if (n < 1 || n > 256) throw Error("Gauss-Legendre order must be in 1..256");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = n * (x * p1 - p0) / (x * x - 1);
      double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    double w = 2 / ((1 - x * x) * derivative * derivative);
    auto lo = static_cast<std::size_t>(i);
    auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0;
  return rule;
}

namespace {

template <typename Task>
void run_parallel(std::size_t count, int threads, Task&& task) {
  std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) task(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<double> integrate_box(std::span<const double> lower, std::span<const double> upper, std::size_t width,
                                  const VectorIntegrand& integrand, const IntegrationOptions& options) {
  std::size_t p = lower.size();
  if (p == 0 || upper.size() != p) throw Error("integration box has inconsistent dimensions");
  for (std::size_t i = 0; i < p; ++i)
    if (!(upper[i] > lower[i])) throw Error("integration box is empty along axis " + std::to_string(i + 1));
  double volume = 1;
  for (std::size_t i = 0; i < p; ++i) volume *= upper[i] - lower[i];

  if (options.monte_carlo) {
    constexpr std::size_t kChunks = 64;
    if (options.samples == 0) throw Error("Monte Carlo needs at least one sample");
    std::vector<std::vector<double>> partial(kChunks, std::vector<double>(width, 0.0));
    run_parallel(kChunks, options.threads, [&](std::size_t chunk) {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(chunk)};
      std::mt19937_64 rng(seq);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      std::size_t begin = options.samples * chunk / kChunks;
      std::size_t end = options.samples * (chunk + 1) / kChunks;
      std::vector<double> x(p);
      double weight = volume / static_cast<double>(options.samples);
      for (std::size_t s = begin; s < end; ++s) {
        for (std::size_t i = 0; i < p; ++i) x[i] = lower[i] + (upper[i] - lower[i]) * unit(rng);
        integrand(x, weight, partial[chunk]);
      }
    });
    std::vector<double> total(width, 0.0);
    for (const auto& part : partial)
      for (std::size_t j = 0; j < width; ++j) total[j] += part[j];
    return total;
  }

  QuadratureRule rule = gauss_legendre(options.nodes);
  auto n = rule.nodes.size();
  std::vector<std::vector<double>> partial(n, std::vector<double>(width, 0.0));
  run_parallel(n, options.threads, [&](std::size_t outer) {
    std::vector<std::size_t> index(p, 0);
    index[0] = outer;
    std::vector<double> x(p);
    while (true) {
      double weight = 1;
      for (std::size_t i = 0; i < p; ++i) {
        double half = 0.5 * (upper[i] - lower[i]);
        x[i] = lower[i] + half * (rule.nodes[index[i]] + 1);
        weight *= half * rule.weights[index[i]];
      }
      integrand(x, weight, partial[outer]);
      std::size_t axis = p - 1;
      while (axis > 0 && ++index[axis] == n) index[axis--] = 0;
      if (axis == 0) break;
    }
  });
  std::vector<double> total(width, 0.0);
  for (const auto& part : partial)
    for (std::size_t j = 0; j < width; ++j) total[j] += part[j];
  return total;
}

}  // namespace hmi
