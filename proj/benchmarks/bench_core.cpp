#include <benchmark/benchmark.h>

#include "pignose/ansatz.hpp"
#include "pignose/genfun.hpp"
#include "pignose/matching.hpp"
#include "pignose/paths.hpp"
#include "pignose/tableaux.hpp"

using namespace pignose;

static void BM_BPolyPerms(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(b_poly_perms(n));
}
BENCHMARK(BM_BPolyPerms)->DenseRange(3, 6);

static void BM_BPolyTableaux(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(b_poly_tableaux(n));
}
BENCHMARK(BM_BPolyTableaux)->DenseRange(3, 6);

static void BM_CfSeries(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cf_series(order));
}
BENCHMARK(BM_CfSeries)->Arg(4)->Arg(6)->Arg(8);

static void BM_AnsatzMoment(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ansatz_bn(n, 1));
}
BENCHMARK(BM_AnsatzMoment)->DenseRange(3, 7);

static void BM_RecurrenceMoment(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(recurrence_bn(n));
}
BENCHMARK(BM_RecurrenceMoment)->DenseRange(3, 7);

static void BM_PathSum(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mn_weight_sum(n));
}
BENCHMARK(BM_PathSum)->DenseRange(2, 5);

static void BM_Phi(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MultiPoly acc;
        for_each_bn(n, [&](const SignedPerm& pi) {
            if (pi.image(1) > 0) benchmark::DoNotOptimize(phi(pi));
        });
    }
}
BENCHMARK(BM_Phi)->DenseRange(2, 4);

static void BM_ClosedFormY1Q(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_y1q(n, 1));
}
BENCHMARK(BM_ClosedFormY1Q)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
