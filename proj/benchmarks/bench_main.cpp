// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "wightlab/bounds.hpp"
#include "wightlab/gram.hpp"
#include "wightlab/partitions.hpp"
#include "wightlab/schwartz_norm.hpp"
#include "wightlab/schwinger_analytic.hpp"
#include "wightlab/schwinger_mc.hpp"
#include "wightlab/wightman_scalar.hpp"

using namespace wightlab;

namespace {

ScalarModel atom_model() { return {{2, 0.5, 1.0}, {-0.5, 0.0, {{1.0, 1.0}}}}; }

std::vector<TestFunction> three_gaussians() {
    return {TestFunction::gaussian({-0.5, 0.0}, 0.3), TestFunction::gaussian({0.0, 0.5}, 0.3),
            TestFunction::gaussian({0.5, 0.0}, 0.3)};
}

void BM_CumulantRoundTrip(benchmark::State& state) {
    const int n = int(state.range(0));
    std::mt19937_64 eng(1);
    std::uniform_real_distribution<double> u(-1, 1);
    CorrelationTable t(n);
    for (SubsetMask m = 1; m <= t.full_mask(); ++m) t[m] = {u(eng), u(eng)};
    for (auto _ : state) benchmark::DoNotOptimize(cumulants_from_moments(moments_from_cumulants(t)));
}
BENCHMARK(BM_CumulantRoundTrip)->DenseRange(2, 8, 2);

void BM_MonteCarloSamples(benchmark::State& state) {
    McConfig cfg;
    cfg.lattice = {2, int(state.range(0)), 0.25};
    cfg.model = atom_model();
    cfg.samples = 200;
    const auto phis = three_gaussians();
    for (auto _ : state) benchmark::DoNotOptimize(estimate_schwinger(cfg, phis));
    state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK(BM_MonteCarloSamples)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_AnalyticThreePoint(benchmark::State& state) {
    const Lattice lat{2, int(state.range(0)), 16.0 / state.range(0)};
    const auto phis = three_gaussians();
    const auto model = atom_model();
    for (auto _ : state) benchmark::DoNotOptimize(s_t_eval(phis, model, lat));
}
BENCHMARK(BM_AnalyticThreePoint)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_TruncatedWightmanLevel(benchmark::State& state) {
    auto g = [](double e, double k) { return MomentumFactor::from(TestFunction::gaussian({e, k}, 0.6)); };
    const auto phi = MomentumTestFunction::product({g(-1.8, 0.2), g(0.9, 0.1), g(0.9, -0.3)});
    const auto model = atom_model();
    HyperplaneQuadrature q;
    for (auto _ : state) benchmark::DoNotOptimize(w_hat_trunc_scalar_level(phi, model, q, int(state.range(0))));
}
BENCHMARK(BM_TruncatedWightmanLevel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DoubleSingularIntegral(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(double_singular_integral(0.5, 0.3, -1.2, 0.7));
}
BENCHMARK(BM_DoubleSingularIntegral)->Unit(benchmark::kMillisecond);

void BM_SchwartzNorm(benchmark::State& state) {
    const std::vector<TestFunction> slots{TestFunction::gaussian({1.0, 0.5}, 0.7),
                                          TestFunction::gaussian({-0.8, 0.2}, 0.9)};
    for (auto _ : state) benchmark::DoNotOptimize(schwartz_norm(slots, {0, 4}));
}
BENCHMARK(BM_SchwartzNorm)->Unit(benchmark::kMillisecond);

void BM_KreinReduce(benchmark::State& state) {
    const auto g = random_majorized_pair(int(state.range(0)), 2, 7);
    for (auto _ : state) benchmark::DoNotOptimize(krein_reduce(g));
}
BENCHMARK(BM_KreinReduce)->Arg(8)->Arg(20)->Arg(64);

}  // namespace
BENCHMARK_MAIN();
