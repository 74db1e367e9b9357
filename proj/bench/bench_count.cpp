#include <benchmark/benchmark.h>

#include "pezzo/dp6/finite.hpp"

using namespace pezzo;

namespace {

dp6::CompiledSystem system_for(std::uint32_t q, unsigned k) {
  auto s = dp6::make_surface({q, false, dp6::LType::Split});
  return dp6::compile(s, dp6::extension(s.field(), k));
}

void BM_CountSerial(benchmark::State& st) {
  auto sys = system_for(static_cast<std::uint32_t>(st.range(0)), static_cast<unsigned>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(dp6::count_points_serial(sys));
}

void BM_CountParallel(benchmark::State& st) {
  auto sys = system_for(static_cast<std::uint32_t>(st.range(0)), static_cast<unsigned>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(dp6::count_points_parallel(sys));
}

}  // namespace

BENCHMARK(BM_CountSerial)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
