// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "moncentre/centre.hpp"
#include "moncentre/convolution.hpp"
#include "moncentre/fixtures.hpp"
#include "moncentre/veck.hpp"

using namespace moncentre;

namespace {

ExecPolicy policy(const benchmark::State& s) { return s.range(0) ? ExecPolicy::parallel : ExecPolicy::serial; }

void BM_compute_centre(benchmark::State& state) {
  const auto m = fixtures::s3_discrete();
  for (auto _ : state) benchmark::DoNotOptimize(compute_centre(m, {}, policy(state)).objects.size());
}

void BM_day_convolve(benchmark::State& state) {
  const auto m = fixtures::s3_discrete();
  SetFunctor f{m->base, {}, {}};
  for (int a = 0; a < 6; ++a) {
    f.sets.push_back(3);
    f.action.push_back({0, 1, 2});
  }
  for (auto _ : state) benchmark::DoNotOptimize(day_convolve(f, f, *m, policy(state)).functor.sets.size());
}

void BM_centre_simples(benchmark::State& state) {
  const Cocycle3 w = trivial_cocycle(symmetric_group_3());
  for (auto _ : state) benchmark::DoNotOptimize(centre_simples(w, 8, policy(state)).simples.size());
}

}  // namespace

BENCHMARK(BM_compute_centre)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_day_convolve)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_centre_simples)->Arg(0)->Arg(1)->ArgName("parallel");

BENCHMARK_MAIN();
