#include <benchmark/benchmark.h>

#include <random>

#include "hmi/density.hpp"
#include "hmi/diffcum.hpp"
#include "hmi/nerve.hpp"
#include "hmi/quadrature.hpp"

namespace {

hmi::DensityOracle correlated() {
  Eigen::Matrix2d cov{{1, 0.5}, {0.5, 1}};
  return hmi::gaussian_density({Eigen::Vector2d::Zero(), cov.inverse()});
}

void BM_GaussLegendre(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hmi::gauss_legendre(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussLegendre)->Arg(16)->Arg(64);

void BM_LocalMoment(benchmark::State& state) {
  auto f = correlated();
  hmi::CubeWindow window({0.0, 0.0}, 0.2);
  hmi::IntegrationOptions options{.nodes = static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(hmi::local_moment(f, window, hmi::MultiIndex{1, 1}, options));
}
BENCHMARK(BM_LocalMoment)->Arg(8)->Arg(16)->Arg(32);

void BM_DifferentialCumulant(benchmark::State& state) {
  auto f = correlated();
  std::vector<double> xi{0.3, -0.1};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        hmi::differential_cumulant(f, xi, hmi::MultiIndex{1, 1}, hmi::CumulantMethod::PartitionSum));
}
BENCHMARK(BM_DifferentialCumulant);

void BM_NerveComplex(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  std::vector<Eigen::VectorXd> pts;
  for (int i = 0; i < state.range(0); ++i) pts.push_back(Eigen::Vector3d(normal(rng), normal(rng), normal(rng)));
  hmi::PointCloud cloud(pts);
  for (auto _ : state) benchmark::DoNotOptimize(hmi::nerve_complex(cloud, 0.8, {.max_dim = 3}));
}
BENCHMARK(BM_NerveComplex)->Arg(8)->Arg(16);

}  // namespace
