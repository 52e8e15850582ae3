#include <benchmark/benchmark.h>

#include <random>

#include "turan/canonical.hpp"
#include "turan/graph.hpp"

using namespace turan;

namespace {

Graph random_graph(std::uint64_t seed, int n, double p) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

static void BM_CanonicalRandom(benchmark::State& state) {
  Graph g = random_graph(1234, static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalRandom)->Arg(9)->Arg(16)->Arg(32)->Arg(64);

static void BM_CanonicalTuran(benchmark::State& state) {
  // Complete multipartite graphs stress orbit pruning: refinement cannot
  // split the parts.
  Graph g = make_turan(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalTuran)->Arg(16)->Arg(32)->Arg(64);

static void BM_CanonicalSparse(benchmark::State& state) {
  Graph g = disjoint_union(make_cycle(9), make_matching(6));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalSparse);

BENCHMARK_MAIN();
