#include "qtilt/char_formulas.hpp"
#include "qtilt/fusion.hpp"
#include "qtilt/presentation.hpp"

#include <benchmark/benchmark.h>

using namespace qtilt;

static void BM_WeylProduct(benchmark::State& state) {
    const Character a = weyl_character(Weight{state.range(0), 0});
    const Character b = weyl_character(Weight{state.range(0) / 2, -3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_WeylProduct)->Arg(16)->Arg(64)->Arg(256);

static void BM_StrikeOutSweep(benchmark::State& state) {
    const long long m = state.range(0);
    for (auto _ : state) {
        for (long long a = 0; a < m; ++a) {
            for (long long b = 0; b < m; ++b) {
                benchmark::DoNotOptimize(strike_out(Weight{a, 0}, Weight{b, 0}, m));
            }
        }
    }
    state.SetItemsProcessed(state.iterations() * m * m);
}
BENCHMARK(BM_StrikeOutSweep)->Arg(5)->Arg(13)->Arg(31);

static void BM_SimpleTensorSimple(benchmark::State& state) {
    const Params P{3, 2};
    const Weight w{state.range(0), 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(simple_tensor_simple(w, w, P));
    }
}
BENCHMARK(BM_SimpleTensorSimple)->Arg(5)->Arg(23)->Arg(95);

static void BM_TiltingTower(benchmark::State& state) {
    const Params P{3, 2};
    for (auto _ : state) {
        // The tower memoizes per process, so climb a fresh stretch each pass.
        static long long offset = 1000;
        benchmark::DoNotOptimize(tilting_character(Weight{offset + state.range(0), 0}, P));
        offset += state.range(0) + 1;
    }
}
BENCHMARK(BM_TiltingTower)->Arg(8)->Arg(64);

static void BM_Multiply(benchmark::State& state) {
    const Params P{2, 3};
    const ClassVector x = simple_tensor_simple(Weight{state.range(0), 0},
                                               Weight{state.range(0) / 2, 1}, P);
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiply(x, x, P));
    }
}
BENCHMARK(BM_Multiply)->Arg(7)->Arg(17);

static void BM_KernelVerify(benchmark::State& state) {
    const Params P{3, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_kernel(state.range(0), P));
    }
}
BENCHMARK(BM_KernelVerify)->Arg(0)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
