#include <benchmark/benchmark.h>

#include "cubicsurf/acm.hpp"
#include "cubicsurf/catalog.hpp"
#include "cubicsurf/census.hpp"
#include "cubicsurf/cohomology.hpp"
#include "cubicsurf/weyl.hpp"

using namespace cubicsurf;

static void BM_Dot(benchmark::State& state) {
  const DivisorClass a(3, -1, -2, 1, 0, -1, 2), b(1, 1, -1, 2, -2, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dot(a, b));
}
BENCHMARK(BM_Dot);

static void BM_HVector(benchmark::State& state) {
  const DivisorClass d(4, -3, -2, -1, 0, 1, -2);
  for (auto _ : state) benchmark::DoNotOptimize(h_vector(d));
}
BENCHMARK(BM_HVector);

static void BM_IsAcm(benchmark::State& state) {
  const DivisorClass d = 2 * b(1);
  for (auto _ : state) benchmark::DoNotOptimize(is_acm(d));
}
BENCHMARK(BM_IsAcm);

static void BM_Orbit72(benchmark::State& state) {
  const DivisorClass root = b(1) - b(2);
  for (auto _ : state) benchmark::DoNotOptimize(orbit(root));
}
BENCHMARK(BM_Orbit72);

static void BM_ExtensionProfile(benchmark::State& state) {
  const DivisorClass t = ell();
  DivisorClass c;
  for (const auto& x : conics())
    if (dot(x, t) == 3) c = x;
  for (auto _ : state) benchmark::DoNotOptimize(extension_profile(c, t));
}
BENCHMARK(BM_ExtensionProfile);

static void BM_FiberCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fiber_check("tc1-line"));
}
BENCHMARK(BM_FiberCheck);

static void BM_GroupClosure(benchmark::State& state) {
  // first call computes, later calls hit the cache; still a useful smoke
  for (auto _ : state) benchmark::DoNotOptimize(weyl_group().size());
}
BENCHMARK(BM_GroupClosure);

BENCHMARK_MAIN();
