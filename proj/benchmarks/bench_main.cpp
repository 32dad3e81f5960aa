#include <benchmark/benchmark.h>

#include "qaskey/ortho_continuous.hpp"
#include "qaskey/ortho_discrete.hpp"
#include "qaskey/qcore.hpp"
#include "qaskey/qpolys.hpp"

using namespace qaskey;

static void BM_QPochInfinite(benchmark::State& state) {
  const QContext ctx(state.range(0) / 1000.0);
  for (auto _ : state) benchmark::DoNotOptimize(qpoch_infinite(cplx{0.3, 0.2}, ctx));
}
BENCHMARK(BM_QPochInfinite)->Arg(300)->Arg(900)->Arg(990);

static void BM_EvalPoly(benchmark::State& state) {
  const QContext ctx(0.4);
  const Family fams[] = {Family::askey_wilson(0.2, 0.3, 0.45, 0.5), Family::dual_hahn(0.2, 0.3, 0.45),
                         Family::al_salam_chihara(0.2, 0.3), Family::big_hermite(0.2),
                         Family::hermite()};
  const Family& f = fams[state.range(0)];
  const int n = static_cast<int>(state.range(1));
  const ZPoint pt(1.3);
  for (auto _ : state) benchmark::DoNotOptimize(eval_poly(f, n, pt, ctx));
  state.SetLabel(std::string(family_name(f.tag())));
}
BENCHMARK(BM_EvalPoly)->ArgsProduct({{0, 1, 2, 3, 4}, {2, 6, 12}});

static void BM_DiscreteGram(benchmark::State& state) {
  const QContext ctx(0.5);
  const Family f = Family::al_salam_chihara(0.2, 0.3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram(DiscreteOrthoSpec(f, 1.0, n, ctx)));
}
BENCHMARK(BM_DiscreteGram)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ContinuousHermite(benchmark::State& state) {
  const QContext ctx(0.5);
  const Family h = Family::hermite();
  for (auto _ : state) benchmark::DoNotOptimize(continuous_inner(h, 1.0, 2, 2, ctx));
}
BENCHMARK(BM_ContinuousHermite)->Unit(benchmark::kMillisecond);

static void BM_QBeta(benchmark::State& state) {
  const QContext ctx(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(qbeta_integral(1.0, {0.2, 0.3, 0.25, 0.35}, ctx));
}
BENCHMARK(BM_QBeta)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
