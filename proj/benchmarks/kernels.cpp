#include <benchmark/benchmark.h>

#include "monstrous/cvcc/cvcc.hpp"
#include "monstrous/fusion/singular.hpp"
#include "monstrous/gf2/mts.hpp"
#include "monstrous/gf2/perm_group.hpp"
#include "monstrous/lattice/leech.hpp"

namespace {

using namespace monstrous;

void BM_CountSingular24(benchmark::State& state) {
  const gf2::QuadraticForm q = gf2::QuadraticForm::hyperbolic(12);
  for (auto _ : state) benchmark::DoNotOptimize(gf2::count_singular(q));
}
BENCHMARK(BM_CountSingular24)->Unit(benchmark::kMillisecond);

void BM_EnumerateMts(benchmark::State& state) {
  const gf2::QuadraticForm q = gf2::QuadraticForm::hyperbolic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gf2::enumerate_mts(q).size());
}
BENCHMARK(BM_EnumerateMts)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_OrthogonalGroupOrder(benchmark::State& state) {
  const gf2::QuadraticForm q = gf2::QuadraticForm::hyperbolic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gf2::group_order(gf2::transvection_generators(q)));
}
BENCHMARK(BM_OrthogonalGroupOrder)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_LeechShellCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lattice::leech_shell_count(state.range(0)));
}
BENCHMARK(BM_LeechShellCount)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_LeechMinimalVectors(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lattice::leech_shell_vectors(4).size());
}
BENCHMARK(BM_LeechMinimalVectors)->Unit(benchmark::kMillisecond);

void BM_FusionWeight2(benchmark::State& state) {
  const fusion::TripleSpace t(fusion::RSpace::standard());
  const fusion::SingularSpace S = fusion::build_S(t);
  for (auto _ : state) benchmark::DoNotOptimize(fusion::dim_weight_space(t, S, 4));
}
BENCHMARK(BM_FusionWeight2)->Unit(benchmark::kMicrosecond);

void BM_BoundAudit(benchmark::State& state) {
  const auto& shell = lattice::leech_minimal_vectors();
  for (auto _ : state)
    benchmark::DoNotOptimize(cvcc::sampled_bound_audit(shell, static_cast<std::uint64_t>(state.range(0)), 1, 1).pairs);
}
BENCHMARK(BM_BoundAudit)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ExtraspecialSquares(benchmark::State& state) {
  const gf2::QuadraticForm q = lattice::mod2_quadratic_space(lattice::build_Leech());
  const cvcc::ExtraspecialGroup g = cvcc::build_extraspecial(q);
  std::uint64_t v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.square({0, v}));
    v = (v + 0x9e3779b9) & 0xffffff;
  }
}
BENCHMARK(BM_ExtraspecialSquares);

}  // namespace

BENCHMARK_MAIN();
