// Serial vs OpenMP kernels: root counting, cube scan, hitting-set verification.

#include <benchmark/benchmark.h>

#include "szkit/classes.hpp"
#include "szkit/generators.hpp"
#include "szkit/hitting.hpp"
#include "szkit/pit.hpp"
#include "szkit/szcodec.hpp"

using namespace szkit;

namespace {

Backend backend_of(const benchmark::State& state) { return state.range(0) ? Backend::Parallel : Backend::Serial; }

// x1 x2 x3 (x1 - x2): non-trivial but root-heavy.
Circuit root_heavy() {
  CircuitBuilder b;
  auto x1 = b.var(1), x2 = b.var(2), x3 = b.var(3);
  return b.build(b.mul(b.mul(b.mul(x1, x2), x3), b.sub(x1, x2)));
}

// Vanishes identically, so the cube scan visits every point.
Circuit hidden_zero() {
  CircuitBuilder b;
  auto x = b.var(1), y = b.var(2), z = b.var(3);
  auto s = b.add(b.add(x, y), z);
  auto lhs = b.mul(s, s);
  auto rhs = b.add(b.add(b.mul(x, x), b.mul(y, y)), b.mul(z, z));
  auto cross = b.add(b.add(b.mul(x, y), b.mul(y, z)), b.mul(x, z));
  return b.build(b.sub(lhs, b.add(rhs, b.add(cross, cross))));
}

void BM_CountRoots(benchmark::State& state) {
  Circuit c = root_heavy();
  auto q = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_roots_brute(c, 3, q, std::uint64_t{1} << 24, backend_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(q * q * q));
}
BENCHMARK(BM_CountRoots)->ArgsProduct({{0, 1}, {16, 48}})->Unit(benchmark::kMillisecond);

void BM_CubeScan(benchmark::State& state) {
  Circuit c = hidden_zero();
  PitOptions opts;
  opts.backend = backend_of(state);
  auto d = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pit_cube_brute(c, 3, d, opts).kind);
}
BENCHMARK(BM_CubeScan)->ArgsProduct({{0, 1}, {2, 4}})->Unit(benchmark::kMillisecond);

void BM_VerifyGrid(benchmark::State& state) {
  auto cls = grid_class(SliceParams{2, 2, 4096, 8});
  const std::uint64_t q = 16;
  const std::size_t r = 8 + 2 * 5 + 1;
  Rng rng(1);
  HittingSet h = sample_hitting_set(2, q, r, rng);
  VerifyOptions opts;
  opts.backend = backend_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_hitting_set(cls, h, opts).hits);
}
BENCHMARK(BM_VerifyGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SliceTableVerify(benchmark::State& state) {
  auto cls = grid_class(SliceParams{2, 2, 4096, 8});
  const std::uint64_t q = 16;
  VerifyOptions opts;
  opts.backend = backend_of(state);
  SliceTable table(cls, q, opts);
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(table.verify(sample_hitting_set(2, q, 19, rng)).hits);
}
BENCHMARK(BM_SliceTableVerify)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
