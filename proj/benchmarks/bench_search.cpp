#include <benchmark/benchmark.h>

#include "turan/extremal_search.hpp"
#include "turan/graph.hpp"

using namespace turan;

static void BM_ExactExTriangleFree(benchmark::State& state) {
  SearchJob job;
  job.n = static_cast<int>(state.range(0));
  job.forbidden.insert(make_complete(3));
  for (auto _ : state) benchmark::DoNotOptimize(exact_ex(job));
}
BENCHMARK(BM_ExactExTriangleFree)->Arg(6)->Arg(7)->Arg(8);

static void BM_ExactExTriangleFreeThreaded(benchmark::State& state) {
  SearchJob job;
  job.n = 8;
  job.forbidden.insert(make_complete(3));
  job.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_ex(job));
}
BENCHMARK(BM_ExactExTriangleFreeThreaded)->Arg(1)->Arg(4);

static void BM_FOracle(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(f_oracle(static_cast<int>(state.range(0)), 2, 3));
}
BENCHMARK(BM_FOracle)->Arg(7)->Arg(8)->Arg(9);

BENCHMARK_MAIN();
