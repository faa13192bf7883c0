#include <benchmark/benchmark.h>

#include "trpca/trpca.hpp"

using namespace trpca;

namespace {

Tensor3 noise(std::size_t n1, std::size_t n2, std::size_t n3, std::uint64_t seed) {
    Rng rng(seed);
    Tensor3 t(n1, n2, n3);
    for (double& v : t.data()) v = rng.normal();
    return t;
}

void BM_Tprod(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto n3 = static_cast<std::size_t>(state.range(1));
    const Tensor3 a = noise(n, n, n3, 1), b = noise(n, n, n3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(tprod(a, b));
}
BENCHMARK(BM_Tprod)->Args({20, 20})->Args({50, 20})->Args({100, 100})->Unit(benchmark::kMillisecond);

void BM_Tsvt(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto n3 = static_cast<std::size_t>(state.range(1));
    const Tensor3 y = noise(n, n, n3, 3);
    const double tau = 0.5 * spectral_norm(y);
    for (auto _ : state) benchmark::DoNotOptimize(tsvt(y, tau));
}
BENCHMARK(BM_Tsvt)->Args({20, 20})->Args({50, 20})->Args({100, 100})->Unit(benchmark::kMillisecond);

void BM_Tsvd(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Tensor3 a = noise(n, n, 16, 4);
    for (auto _ : state) benchmark::DoNotOptimize(tsvd(a));
}
BENCHMARK(BM_Tsvd)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

// Ten solver iterations; convergence is disabled by a tiny eps.
void BM_SolveTenIterations(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto n3 = static_cast<std::size_t>(state.range(1));
    const Tensor3 x = gen_low_tubal_rank(n, n, n3, n / 20 + 1, 5) +
                      gen_sparse_bernoulli(n, n, n3, 0.05, SparseMode::BernoulliRho, 6);
    SolverConfig cfg;
    cfg.max_iters = 10;
    cfg.eps = 1e-300;
    for (auto _ : state) benchmark::DoNotOptimize(solve(x, cfg));
}
BENCHMARK(BM_SolveTenIterations)->Args({50, 20})->Args({100, 100})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
