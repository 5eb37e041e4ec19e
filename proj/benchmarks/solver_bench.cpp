#include <benchmark/benchmark.h>

#include <random>

#include "hpl/extension/solver.hpp"
#include "hpl/period/theorems.hpp"
#include "hpl/torus/harmonic_basis.hpp"
#include "support/random_forms.hpp"

namespace {

using namespace hpl;

void BM_SolveExtension(benchmark::State& state) {
  std::mt19937_64 rng(5);
  auto const g = torus::TorusGeometry::square(2);
  int const band = static_cast<int>(state.range(0));
  auto const phi = testing::triangular_field(rng, g, 0.5);
  torus::PrimitiveBasis const basis(g, 2);
  extension::ExtensionProblem const problem(basis.form(1, band), phi, band);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extension::solve_extension(problem));
  }
}
BENCHMARK(BM_SolveExtension)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CompareSections(benchmark::State& state) {
  auto const family = period::preset("abelian-full");
  period::TorusHodgeStructure const s(family.geometry_ptr(), 2);
  period::Parameter const t{Complex(0.1), Complex(0.05, 0.1), Complex(-0.1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(period::compare_sections(family, t, s, 1));
  }
}
BENCHMARK(BM_CompareSections)->Unit(benchmark::kMillisecond);

}  // namespace
