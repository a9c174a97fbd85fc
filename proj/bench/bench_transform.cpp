#include <random>

#include <benchmark/benchmark.h>

#include "dualbent/kernels.hpp"
#include "dualbent/walsh.hpp"

using namespace dualbent;

namespace {

kernels::ZetaTable random_table(unsigned p, unsigned n) {
  std::mt19937_64 rng(p * 1000 + n);
  std::uniform_int_distribution<unsigned> d(0, p - 1);
  std::size_t size = 1;
  for (unsigned i = 0; i < n; ++i) size *= p;
  std::vector<std::uint8_t> e(size);
  for (auto& x : e) x = static_cast<std::uint8_t>(d(rng));
  return kernels::zeta_powers(p, n, e);
}

// args: p, n
void BM_transform_serial(benchmark::State& state) {
  auto base = random_table(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) {
    auto t = base;
    kernels::serial::transform(t, -1);
    benchmark::DoNotOptimize(t.data.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(base.size()));
}

void BM_transform_openmp(benchmark::State& state) {
  auto base = random_table(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) {
    auto t = base;
    kernels::transform(t, -1);
    benchmark::DoNotOptimize(t.data.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(base.size()));
}

// Full Walsh pipeline including the Gram index map and canonical reduction.
void BM_walsh_fast(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0)), n = static_cast<unsigned>(state.range(1));
  auto V = SpaceDesc::dot(p, n);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned> d(0, p - 1);
  std::vector<std::uint8_t> v(V->size());
  for (auto& x : v) x = static_cast<std::uint8_t>(d(rng));
  PFunc f(V, v);
  for (auto _ : state) benchmark::DoNotOptimize(walsh_fast(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(V->size()));
}

void sizes(benchmark::internal::Benchmark* b) {
  b->Args({2, 16})->Args({2, 20})->Args({3, 10})->Args({3, 12})->Args({5, 7})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_transform_serial)->Apply(sizes);
BENCHMARK(BM_transform_openmp)->Apply(sizes);
BENCHMARK(BM_walsh_fast)->Args({2, 20})->Args({3, 12})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
