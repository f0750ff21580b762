#include <benchmark/benchmark.h>

#include <random>

#include "deca/catalog.hpp"
#include "deca/chains.hpp"
#include "deca/loopgroup.hpp"

namespace {

using namespace deca;

IntMat random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-4, 4);
  IntMat A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A.at(i, j) = entry(rng);
  return A;
}

void bm_smith(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IntMat A = random_matrix(n, n, 7);
  for (auto _ : state) {
    auto r = smith_normal_form(A);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(bm_smith)->Arg(16)->Arg(32)->Arg(64);

void bm_total_of_shift(benchmark::State& state) {
  SSetPtr X = catalog_sset("s1xs1");
  BisimplicialSet B = dec_total(*X);
  for (auto _ : state) {
    SimplicialSet T = total(B);
    benchmark::DoNotOptimize(T.truncation);
  }
}
BENCHMARK(bm_total_of_shift);

void bm_wbar(benchmark::State& state) {
  const SimplicialGroup& G = catalog_group("c3");
  for (auto _ : state) {
    SimplicialSet W = wbar(G);
    benchmark::DoNotOptimize(W.truncation);
  }
}
BENCHMARK(bm_wbar);

void bm_loop_group(benchmark::State& state) {
  SSetPtr X = catalog_sset("p2");
  for (auto _ : state) {
    PresentedSimplicialGroup LG = loop_group(*X);
    benchmark::DoNotOptimize(LG.truncation);
  }
}
BENCHMARK(bm_loop_group);

void bm_homology_wbar(benchmark::State& state) {
  ChainComplex C = normalized_chains(wbar(catalog_group("c2")));
  for (auto _ : state) {
    auto h = homology(C, 3);
    benchmark::DoNotOptimize(h.rank);
  }
}
BENCHMARK(bm_homology_wbar);

}  // namespace

BENCHMARK_MAIN();
