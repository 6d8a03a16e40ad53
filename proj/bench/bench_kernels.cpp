// Serial reference kernels against their OpenMP versions, plus a whole
// verification suite run both ways. Set OMP_NUM_THREADS to vary the pool.

#include <benchmark/benchmark.h>

#include "wittkit/kernels.hpp"
#include "wittkit/random.hpp"
#include "wittkit/suites.hpp"

using namespace wittkit;

namespace {

std::vector<RingElement> entries(const RingSpec& ring, std::size_t n, std::uint64_t stream) {
  Generator g(99, stream, n);
  std::vector<RingElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(g.element(ring));
  return out;
}

const RingSpec kRing = RingSpec::integers_mod(1000003);

template <bool Parallel>
void BM_mullow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = entries(kRing, n, 1), b = entries(kRing, n, 2);
  for (auto _ : state) {
    auto c = Parallel ? kernels::omp::mullow(a, b, n) : kernels::serial::mullow(a, b, n);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(state.range(0));
}

template <bool Parallel>
void BM_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = entries(kRing, n * n, 3), b = entries(kRing, n * n, 4);
  for (auto _ : state) {
    auto c = Parallel ? kernels::omp::matmul(a, b, n) : kernels::serial::matmul(a, b, n);
    benchmark::DoNotOptimize(c);
  }
}

template <bool Parallel>
void BM_kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = entries(kRing, n * n, 5), b = entries(kRing, n * n, 6);
  for (auto _ : state) {
    auto c = Parallel ? kernels::omp::kron(a, n, b, n) : kernels::serial::kron(a, n, b, n);
    benchmark::DoNotOptimize(c);
  }
}

template <Execution E>
void BM_suite(benchmark::State& state) {
  SuiteOptions o;
  o.ring = RingSpec::prime_field(5);
  o.precision = 8;
  o.trials = 50;
  o.execution = E;
  for (auto _ : state) {
    auto r = run_suite("all", o);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_mullow<false>)->Name("mullow/serial")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_mullow<true>)->Name("mullow/omp")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_matmul<false>)->Name("matmul/serial")->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_matmul<true>)->Name("matmul/omp")->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_kron<false>)->Name("kron/serial")->RangeMultiplier(2)->Range(4, 16);
BENCHMARK(BM_kron<true>)->Name("kron/omp")->RangeMultiplier(2)->Range(4, 16);
BENCHMARK(BM_suite<Execution::Serial>)->Name("suite_all/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite<Execution::Parallel>)->Name("suite_all/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
