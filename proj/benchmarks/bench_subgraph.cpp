#include <benchmark/benchmark.h>

#include "turan/ballooning.hpp"
#include "turan/constructions.hpp"
#include "turan/cracking.hpp"
#include "turan/graph.hpp"
#include "turan/subgraph.hpp"

using namespace turan;

static void BM_FreenessApexJoin(benchmark::State& state) {
  // The acceptance-style host: one apex over a balanced bipartite graph,
  // checked against a 12-vertex three-cycle ballooning. Twin reduction
  // collapses the Turan sides.
  Graph host = join(make_complete(1), make_turan(15, 2));
  Graph pattern =
      odd_balloon(BalloonSpec::uniform(make_complete(3), 5)).graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(find_embedding(host, pattern));
}
BENCHMARK(BM_FreenessApexJoin);

static void BM_FreenessNoTwins(benchmark::State& state) {
  Graph host = join(make_complete(1), make_turan(15, 2));
  Graph pattern =
      odd_balloon(BalloonSpec::uniform(make_complete(3), 5)).graph;
  EmbedOptions opt;
  opt.twin_reduction = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(find_embedding(host, pattern, opt));
}
BENCHMARK(BM_FreenessNoTwins);

static void BM_ContainsComplete(benchmark::State& state) {
  Graph host = make_complete(16);
  Graph pattern =
      odd_balloon(BalloonSpec::uniform(make_complete(3), 5)).graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(find_embedding(host, pattern));
}
BENCHMARK(BM_ContainsComplete);

static void BM_CertifyWheelFamily(benchmark::State& state) {
  Graph host = build_h_graph(30, 2, 1);
  GraphFamily family = cracking_family(make_wheel(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_free(host, family));
}
BENCHMARK(BM_CertifyWheelFamily);

BENCHMARK_MAIN();
