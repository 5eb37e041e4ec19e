#include <benchmark/benchmark.h>

#include <random>

#include "hpl/torus/contraction.hpp"
#include "hpl/torus/operators.hpp"
#include "hpl/torus/pointwise.hpp"
#include "support/random_forms.hpp"

namespace {

using namespace hpl;

void BM_TOperator(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto const g = testing::random_geometry(rng, 2);
  auto const f = testing::random_form(rng, g, {1, 1}, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(torus::t_operator(f));
  }
}
BENCHMARK(BM_TOperator)->Arg(1)->Arg(2)->Arg(3);

void BM_Contraction(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto const g = testing::random_geometry(rng, 2);
  int const band = static_cast<int>(state.range(0));
  auto const phi = testing::random_vector_form(rng, g, 1, 1);
  auto const f = testing::random_form(rng, g, {2, 0}, band);
  for (auto _ : state) {
    benchmark::DoNotOptimize(torus::contract(phi, f));
  }
}
BENCHMARK(BM_Contraction)->Arg(1)->Arg(2)->Arg(3);

void BM_SupNorm(benchmark::State& state) {
  std::mt19937_64 rng(3);
  int const d = static_cast<int>(state.range(0));
  auto const g = testing::random_geometry(rng, d);
  auto const phi = testing::random_vector_form(rng, g, 1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(torus::sup_operator_norm(phi));
  }
}
BENCHMARK(BM_SupNorm)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ConjugationResidual(benchmark::State& state) {
  std::mt19937_64 rng(4);
  auto const g = testing::random_geometry(rng, 2);
  auto const phi = testing::random_vector_form(rng, g, 1, 1, 0.1);
  auto const f = testing::random_form(rng, g, {1, 0}, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(torus::conjugation_residual(phi, f));
  }
}
BENCHMARK(BM_ConjugationResidual)->Unit(benchmark::kMillisecond);

}  // namespace
