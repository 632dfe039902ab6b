// Serial reference versus OpenMP kernels.
#include "cmlab/kernels/kernels.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <cstdio>
#include <cstring>

using namespace cmlab::kernels;

namespace {

std::vector<long> odd_primes(long limit) {
  auto p = primes_up_to(limit);
  p.erase(p.begin());
  return p;
}

std::vector<long> coefficients(long n) {
  std::vector<long> c(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = static_cast<long>(i % 5) - 2;
  return c;
}

void BM_point_counts(benchmark::State& state, Exec exec) {
  const auto primes = odd_primes(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(traces_by_enumeration(-4, 0, primes, exec));
  state.counters["primes"] = static_cast<double>(primes.size());
}

void BM_dirichlet(benchmark::State& state, Exec exec) {
  const auto c = coefficients(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_partial_sum(c, 2.0L, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK_CAPTURE(BM_point_counts, serial, Exec::serial)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_point_counts, parallel, Exec::parallel)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_dirichlet, serial, Exec::serial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_dirichlet, parallel, Exec::parallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

// The parallel kernels must reproduce the serial reference exactly.
bool agree() {
  const auto primes = odd_primes(5000);
  const auto c = coefficients(200000);
  const long double a = dirichlet_partial_sum(c, 2.0L, Exec::serial);
  const long double b = dirichlet_partial_sum(c, 2.0L, Exec::parallel);
  return traces_by_enumeration(-4, 0, primes, Exec::serial) == traces_by_enumeration(-4, 0, primes, Exec::parallel) &&
         std::memcmp(&a, &b, 10) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::printf("threads: %d\n", omp_get_max_threads());
  if (!agree()) {
    std::fprintf(stderr, "parallel kernels disagree with the serial reference\n");
    return 1;
  }
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 2;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
