#include <benchmark/benchmark.h>

#include "leibcoh/catalog.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/linalg.hpp"
#include "leibcoh/spectral.hpp"

using namespace leibcoh;

namespace {

// Coboundary D_n of HL(sl2, ad) over Q.
void BM_CoboundarySl2Adjoint(benchmark::State& state) {
  LeibnizAlgebra g = catalog("sl2", FieldSpec::rationals());
  Bimodule m = adjoint_bimodule(g);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_bimodule(m, n));
}
BENCHMARK(BM_CoboundarySl2Adjoint)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_RankQ(benchmark::State& state) {
  LeibnizAlgebra g = catalog("sl2", FieldSpec::rationals());
  SparseMatrix d = coboundary_bimodule(adjoint_bimodule(g), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(d));
}
BENCHMARK(BM_RankQ)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_RankFp(benchmark::State& state) {
  LeibnizAlgebra g = catalog("sl2", FieldSpec::prime(5));
  SparseMatrix d = coboundary_bimodule(adjoint_bimodule(g), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(d));
}
BENCHMARK(BM_RankFp)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

// HL^0..HL^n of a over F_2 with trivial coefficients.
void BM_CohomologyFibonacci(benchmark::State& state) {
  LeibnizAlgebra a = catalog("a", FieldSpec::prime(2));
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(trivial_bimodule(a), n));
}
BENCHMARK(BM_CohomologyFibonacci)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_PagesRelHeisenberg(benchmark::State& state) {
  LeibnizAlgebra h = catalog("heisenberg", FieldSpec::rationals());
  auto n = static_cast<std::size_t>(state.range(0));
  FilteredComplex fc = filtration_rel(trivial_module(h), n);
  for (auto _ : state) benchmark::DoNotOptimize(pages(fc, n + 2, n));
}
BENCHMARK(BM_PagesRelHeisenberg)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_PagesIdealN(benchmark::State& state) {
  LeibnizAlgebra n_alg = catalog("N", FieldSpec::rationals());
  auto n = static_cast<std::size_t>(state.range(0));
  FilteredComplex fc = filtration_ideal(trivial_bimodule(n_alg), leibniz_kernel(n_alg), n);
  for (auto _ : state) benchmark::DoNotOptimize(pages(fc, n + 2, n));
}
BENCHMARK(BM_PagesIdealN)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
