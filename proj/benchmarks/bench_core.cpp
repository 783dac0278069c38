// Microbenchmarks for the hot paths: exact row reduction, the envelope
// certificate, the rank-4 module analyses, and the tangent solver.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "fernkit/borel.hpp"
#include "fernkit/local_model.hpp"
#include "fernkit/matrix.hpp"
#include "fernkit/permutation.hpp"
#include "fernkit/phimod.hpp"
#include "fernkit/random.hpp"

using namespace fernkit;
using exactlin::RMatrix;

namespace {

void BM_rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  rng::SplitMix64 gen(99);
  const RMatrix m = rng::random_matrix(gen, n, n, -9, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exactlin::rref(m));
  }
}
BENCHMARK(BM_rref)->Arg(4)->Arg(8)->Arg(16);

void BM_envelope_verify(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  rng::SplitMix64 gen(7);
  const RMatrix g = rng::random_invertible(gen, n, -9, 9);
  const weyl::Permutation w_prime = borel::envelope_witness(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(borel::verify_envelope(g, w_prime));
  }
}
BENCHMARK(BM_envelope_verify)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_weak_admissibility_rank4(benchmark::State& state) {
  const phimod::FilteredPhiModule d = phimod::example4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(phimod::weak_admissibility(d));
  }
}
BENCHMARK(BM_weak_admissibility_rank4);

void BM_refinement_table_rank4(benchmark::State& state) {
  const phimod::FilteredPhiModule d = phimod::example4();
  for (auto _ : state) {
    std::size_t noncritical = 0;
    for (const phimod::Refinement& r : phimod::refinements(d)) {
      if (phimod::is_noncritical(d, r)) ++noncritical;
    }
    benchmark::DoNotOptimize(noncritical);
  }
}
BENCHMARK(BM_refinement_table_rank4);

void BM_tangent_sweep(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const RMatrix id = RMatrix::identity(n);
  const RMatrix zero = RMatrix::zero(n, n);
  std::vector<weyl::Permutation> group;
  {
    std::vector<int> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i + 1);
    do {
      group.push_back(weyl::Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
  }
  for (auto _ : state) {
    std::size_t total = 0;
    for (const weyl::Permutation& w : group) {
      total += localmodel::tangent_fiber_dim(
                   localmodel::LocalModelPoint{id, zero, w.matrix()})
                   .fiber_tangent_dim;
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_tangent_sweep)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
