#include <benchmark/benchmark.h>

#include "hoqmc/interlace.hpp"
#include "hoqmc/qmc.hpp"
#include "hoqmc/quality.hpp"
#include "hoqmc/walsh.hpp"
#include "hoqmc/wce.hpp"

using namespace hoqmc;

static void BM_PointGeneration(benchmark::State& state) {
  const auto net = sobol_matrices(4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(net.points());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(net.num_points()));
}
BENCHMARK(BM_PointGeneration)->Arg(8)->Arg(12)->Arg(16);

static void BM_StrictT(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto net = interleave_matrices(sobol_matrices(2, m), 2);
  for (auto _ : state) benchmark::DoNotOptimize(strict_t(net, 2, Rational::integer(1)));
}
BENCHMARK(BM_StrictT)->DenseRange(4, 8, 2);

static void BM_DualEnumeration(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto net = interleave_matrices(sobol_matrices(2, m), 2);
  for (auto _ : state) benchmark::DoNotOptimize(min_mu_dual(net, 2, net.n()));
}
BENCHMARK(BM_DualEnumeration)->DenseRange(4, 8, 2);

static void BM_WorstCaseError(benchmark::State& state) {
  const auto net = interleave_matrices(sobol_matrices(4, static_cast<std::size_t>(state.range(0))), 2);
  const auto sp = SmoothnessParam::from_theta(2.0);
  const auto w = WeightModel::uniform(2, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(worst_case_error(net, sp, w));
}
BENCHMARK(BM_WorstCaseError)->Arg(4)->Arg(5);

static void BM_WalshCoefficient(benchmark::State& state) {
  const RealFunction f = [](std::span<const double> x) { return std::exp(x[0]); };
  const std::vector<std::uint64_t> k{std::uint64_t{1} << (state.range(0) - 1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(walsh_coefficient(f, k, 2, static_cast<unsigned>(state.range(0)) + 1));
}
BENCHMARK(BM_WalshCoefficient)->Arg(8)->Arg(14);

static void BM_QmcIntegrate(benchmark::State& state) {
  const auto f = builtin_test_function("exp", 2);
  const auto net = interleave_matrices(sobol_matrices(4, static_cast<std::size_t>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(qmc_integrate(f, net));
}
BENCHMARK(BM_QmcIntegrate)->Arg(10)->Arg(14);
BENCHMARK_MAIN();
