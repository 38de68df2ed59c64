#include <benchmark/benchmark.h>

#include "irr/bockstein/pages.hpp"
#include "irr/chern/chern.hpp"
#include "irr/exact/bernoulli.hpp"
#include "irr/kops/artin_hasse.hpp"
#include "irr/verify/suites.hpp"

namespace {

void BM_BernoulliTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(irr::BernoulliTable(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BernoulliTable)->Arg(10)->Arg(30)->Arg(60);

void BM_RkEigenvalue(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(irr::chern::rk_eigenvalue(7, 3, n));
}
BENCHMARK(BM_RkEigenvalue)->DenseRange(1, 6);

void BM_ArtinHasseLog(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const irr::KClass x = irr::line_power(-1, n) - irr::KClass::one(n);
  for (auto _ : state) benchmark::DoNotOptimize(irr::kops::artin_hasse_log(3, x));
}
BENCHMARK(BM_ArtinHasseLog)->Arg(4)->Arg(8)->Arg(12);

void BM_BocksteinPages(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const std::int64_t D = 2 * 4 * static_cast<std::int64_t>(p * p * p);
  const auto model = irr::bockstein::build_model(irr::bockstein::ModelKind::Type1, p, 4, D);
  for (auto _ : state) benchmark::DoNotOptimize(irr::bockstein::verify_page_formula(model, 3));
}
BENCHMARK(BM_BocksteinPages)->Arg(3)->Arg(5)->Arg(7);

void BM_RunAll(benchmark::State& state) {
  const irr::verify::SuiteConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(irr::verify::run_all(config));
}
BENCHMARK(BM_RunAll)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
