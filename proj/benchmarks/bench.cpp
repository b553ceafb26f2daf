#include <benchmark/benchmark.h>

#include "romik/oracle.hpp"

using namespace romik;

namespace {

void BM_BerggrenByHeight(benchmark::State& state) {
    Int bound(state.range(0));
    for (auto _ : state) {
        auto v = berggren_by_height(bound);
        benchmark::DoNotOptimize(v.size());
    }
}
BENCHMARK(BM_BerggrenByHeight)->Arg(10000)->Arg(100000);

void BM_BerggrenParallel(benchmark::State& state) {
    Int bound(100000);
    for (auto _ : state) {
        auto v = berggren_by_height(bound, unsigned(state.range(0)));
        benchmark::DoNotOptimize(v.size());
    }
}
BENCHMARK(BM_BerggrenParallel)->Arg(1)->Arg(4);

void BM_Spectrum(benchmark::State& state) {
    for (auto _ : state) {
        auto v = spectrum_below_2(int(state.range(0)));
        benchmark::DoNotOptimize(v.size());
    }
}
BENCHMARK(BM_Spectrum)->Arg(10)->Arg(30);

void BM_CohnMatrix(benchmark::State& state) {
    ChristoffelWord w = christoffel(34, 55);
    for (auto _ : state) {
        auto m = cohn_matrix(w.word);
        benchmark::DoNotOptimize(m.m.a);
    }
}
BENCHMARK(BM_CohnMatrix);

void BM_MarkoffTree(benchmark::State& state) {
    for (auto _ : state) {
        auto levels = enumerate_markoff(int(state.range(0)));
        benchmark::DoNotOptimize(levels.back().size());
    }
}
BENCHMARK(BM_MarkoffTree)->Arg(8)->Arg(12);

void BM_AdmissiblePeriodic(benchmark::State& state) {
    std::vector<Digit> per{3, 1, 2, 1, 3, 2, 2, 1, 3, 2, 3, 1, 2, 2};
    for (auto _ : state) {
        auto rep = admissible_periodic(per);
        benchmark::DoNotOptimize(rep.cls);
    }
}
BENCHMARK(BM_AdmissiblePeriodic);

void BM_EstimateByCylinders(benchmark::State& state) {
    DigitWord p({}, {3, 1, 2, 2});
    for (auto _ : state) {
        auto rep = estimate_by_cylinders(p, int(state.range(0)));
        benchmark::DoNotOptimize(rep.estimate.size());
    }
}
BENCHMARK(BM_EstimateByCylinders)->Arg(30)->Arg(60);

void BM_TowerArithmetic(benchmark::State& state) {
    QuadTower x = (QuadTower(2) + QuadTower::sqrt_int(34)) / (QuadTower(3) * QuadTower::sqrt2());
    for (auto _ : state) {
        QuadTower y = x * x + x - QuadTower(1);
        benchmark::DoNotOptimize(y.sign());
    }
}
BENCHMARK(BM_TowerArithmetic);

} // namespace

BENCHMARK_MAIN();
