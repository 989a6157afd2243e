#include <benchmark/benchmark.h>

#include <vector>

#include "qbch/oracle.hpp"
#include "qbch/quantum.hpp"

namespace {

using namespace qbch;

CyclicCode code(std::int64_t q, std::int64_t n, std::vector<Residue> reps) { return build_code(q, n, reps); }

void BM_support_search_serial(benchmark::State& state) {
  const CyclicCode c = code(16, 17, {1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(serial::min_weight_search(c, 5));
}

void BM_support_search_omp(benchmark::State& state) {
  const CyclicCode c = code(16, 17, {1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(min_weight_search(c, 5));
}

void BM_enumerate_serial(benchmark::State& state) {
  const CyclicCode c = code(3, 26, {0, 1, 2, 4, 5});
  for (auto _ : state) benchmark::DoNotOptimize(serial::enumerate_min_weight(c));
}

void BM_enumerate_omp(benchmark::State& state) {
  const CyclicCode c = code(3, 26, {0, 1, 2, 4, 5});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_min_weight(c));
}

void BM_css_serial(benchmark::State& state) {
  const Construction con = construct_css_II(3, 13, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(serial::css_distance(con.first, *con.second));
}

void BM_css_omp(benchmark::State& state) {
  const Construction con = construct_css_II(3, 13, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(css_distance(con.first, *con.second));
}

}  // namespace

BENCHMARK(BM_support_search_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_support_search_omp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_enumerate_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_omp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_css_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_css_omp)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
