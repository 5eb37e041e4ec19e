#include <benchmark/benchmark.h>

#include <random>

#include "hpl/hodge/block_lu.hpp"
#include "support/random_forms.hpp"

namespace {

using namespace hpl;

void BM_BlockLu(benchmark::State& state) {
  std::mt19937_64 rng(6);
  int const h = static_cast<int>(state.range(0));
  hodge::HodgeType const type({h, h, h, h});
  Matrix const a = testing::random_matrix(rng, type.dimension(), type.dimension());
  hodge::BlockMatrix const m(a, type.partition());
  for (auto _ : state) {
    benchmark::DoNotOptimize(hodge::block_lu(m));
  }
}
BENCHMARK(BM_BlockLu)->Arg(1)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
