#include <benchmark/benchmark.h>

#include <random>

#include "hmi/hierarchy.hpp"
#include "hmi/network.hpp"
#include "hmi/partitions.hpp"

namespace {

void BM_EnumeratePartitions(benchmark::State& state) {
  hmi::MultiIndex k(std::vector<int>(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(hmi::enumerate_partitions(k));
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(4, 9);

void BM_CumulantFromMoments(benchmark::State& state) {
  hmi::MultiIndex k{2, 2, 2};
  hmi::RealMomentTable table(3);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) table.set(hmi::MultiIndex{a, b, c}, a + b + c == 0 ? 1.0 : 0.5 / (1 + a + b + c));
  for (auto _ : state) benchmark::DoNotOptimize(hmi::cumulant_from_moments(k, table));
}
BENCHMARK(BM_CumulantFromMoments);

void BM_MinimalNonfaces(benchmark::State& state) {
  std::mt19937_64 rng(1);
  int p = static_cast<int>(state.range(0));
  std::vector<hmi::Face> faces;
  for (int i = 0; i < 2 * p; ++i) faces.push_back(hmi::Face::from_mask(rng() & hmi::Face::range(p).mask()));
  auto complex = hmi::make_complex(p, faces);
  for (auto _ : state) benchmark::DoNotOptimize(hmi::minimal_nonfaces(complex));
}
BENCHMARK(BM_MinimalNonfaces)->Arg(8)->Arg(12)->Arg(16);

void BM_ChordalityAndFactorize(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  hmi::Graph g = hmi::Graph::on(n);
  for (int v = 1; v < n; ++v) {
    g.add_edge(v, v + 1);
    if (v + 2 <= n) g.add_edge(v, v + 2);
  }
  auto complex = hmi::flag_complex(g);
  for (auto _ : state) benchmark::DoNotOptimize(hmi::factorize(complex));
}
BENCHMARK(BM_ChordalityAndFactorize)->Arg(10)->Arg(20)->Arg(40);

void BM_NetworkCuts(benchmark::State& state) {
  int rungs = static_cast<int>(state.range(0));
  std::vector<int> nodes;
  std::vector<hmi::NetworkEdge> edges;
  for (int i = 1; i <= 2 * rungs; ++i) nodes.push_back(i);
  int id = 0;
  for (int r = 0; r < rungs; ++r) {
    edges.push_back({++id, 2 * r + 1, 2 * r + 2});
    if (r + 1 < rungs) {
      edges.push_back({++id, 2 * r + 1, 2 * r + 3});
      edges.push_back({++id, 2 * r + 2, 2 * r + 4});
    }
  }
  hmi::Network ladder(nodes, edges, 1, 2 * rungs);
  for (auto _ : state) benchmark::DoNotOptimize(hmi::minimal_cuts(ladder));
}
BENCHMARK(BM_NetworkCuts)->Arg(3)->Arg(5);

}  // namespace
