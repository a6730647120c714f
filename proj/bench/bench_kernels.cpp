// Serial reference vs OpenMP for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include "lsep/generators.hpp"
#include "lsep/kernels.hpp"
#include "lsep/separability.hpp"

using namespace lsep;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_DensitySweepSphere(benchmark::State& st) {
  auto lambdas = linspace(0.0, 0.6, 200);
  auto rhos = linspace(0.65, 1.2, 20);
  for (auto _ : st) benchmark::DoNotOptimize(bound_sweep(Geometry::Spherical, Quantity::Density, lambdas, rhos, exec_of(st)));
}

void BM_TightnessSweepHyperbolic(benchmark::State& st) {
  auto lambdas = linspace(0.0, 1.0, 200);
  auto rhos = linspace(1.0, 2.0, 20);
  for (auto _ : st)
    benchmark::DoNotOptimize(bound_sweep(Geometry::Hyperbolic, Quantity::Tightness, lambdas, rhos, exec_of(st)));
}

const Packing& random_plane() {
  static const Packing p = random_saturated(Geometry::Euclidean, 1.0, 30.0, 7);
  return p;
}

void BM_MinPairwiseDistance(benchmark::State& st) {
  const Packing& p = random_plane();
  for (auto _ : st) benchmark::DoNotOptimize(min_pairwise_distance(p.centers, exec_of(st)));
}

void BM_EmptyCircumdisks(benchmark::State& st) {
  static const Delaunay d = delaunay(random_plane().centers);
  for (auto _ : st) benchmark::DoNotOptimize(count_nonempty_circumdisks(d, 1e-10, exec_of(st)));
}

void BM_CellDensities(benchmark::State& st) {
  static const Decomposition dec = refine(molnar(random_plane().centers), 1.0);
  for (auto _ : st) benchmark::DoNotOptimize(cell_densities(dec, 1.0, exec_of(st)));
}

void BM_Separability(benchmark::State& st) {
  static const Packing p = euclidean_extremal_density_lattice(0.9, 5);
  for (auto _ : st) benchmark::DoNotOptimize(is_lambda_separable(p, st.range(0) != 0));
}

}  // namespace

BENCHMARK(BM_DensitySweepSphere)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TightnessSweepHyperbolic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinPairwiseDistance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EmptyCircumdisks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellDensities)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Separability)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
