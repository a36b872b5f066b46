#include <benchmark/benchmark.h>

#include "qcones/bodies.hpp"
#include "qcones/eigen.hpp"
#include "qcones/random.hpp"
#include "qcones/seesaw.hpp"
#include "qcones/walk.hpp"

using namespace qcones;

static void BM_Eigh(benchmark::State& state) {
  RngStream rng(1);
  const HermMat h = random_hermitian_direction(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(h));
}
BENCHMARK(BM_Eigh)->Arg(4)->Arg(9)->Arg(16);

static void BM_PsdCholesky(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  RngStream rng(2);
  const HermMat h = random_state_hs(d, rng);
  std::vector<cplx> work(d * d);
  for (auto _ : state)
    benchmark::DoNotOptimize(is_psd_raw(h.matrix().data(), d, 1e-9, work));
}
BENCHMARK(BM_PsdCholesky)->Arg(4)->Arg(9)->Arg(16);

static void BM_Seesaw(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RngStream rng(3);
  const HermMat d = random_hermitian_direction(n * n, rng) + HermMat::identity(n * n) * 0.3;
  SeesawParams p;
  p.restarts = 8;
  for (auto _ : state) benchmark::DoNotOptimize(seesaw_min(d, n, p));
}
BENCHMARK(BM_Seesaw)->Arg(2)->Arg(3);

static void BM_BlockPositiveQubit(benchmark::State& state) {
  RngStream rng(4);
  const HermMat d = random_hermitian_direction(4, rng) + HermMat::identity(4) * 0.3;
  for (auto _ : state) benchmark::DoNotOptimize(block_positive_qubit(d, 1e-9));
}
BENCHMARK(BM_BlockPositiveQubit);

static void BM_HitAndRunStep(benchmark::State& state) {
  const ConeId cone = static_cast<ConeId>(state.range(0));
  const MatrixBody body(BodySpec{cone, 2, Slice::Base, {}});
  WalkState s = walk_start(body);
  RngStream rng(5);
  for (auto _ : state) hit_and_run_step(body, s, rng);
  state.SetLabel(body.name());
}
BENCHMARK(BM_HitAndRunStep)
    ->Arg(static_cast<int>(ConeId::CP))
    ->Arg(static_cast<int>(ConeId::T))
    ->Arg(static_cast<int>(ConeId::D));

BENCHMARK_MAIN();
