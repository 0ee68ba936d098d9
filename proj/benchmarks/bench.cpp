#include <benchmark/benchmark.h>

#include "tableaux/bijection.hpp"
#include "tableaux/corner_run.hpp"
#include "tableaux/diagram.hpp"
#include "tableaux/formulas.hpp"
#include "tableaux/serialize.hpp"
#include "tableaux/tableau.hpp"

using namespace tableaux;

namespace {

void BM_EnumerateTlt(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long seen = 0;
        for_each_tableau(Family::tlt, n, [&](const Tableau&) { ++seen; });
        benchmark::DoNotOptimize(seen);
    }
}

void BM_EnumeratePt(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long seen = 0;
        for_each_tableau(Family::pt, n, [&](const Tableau&) { ++seen; });
        benchmark::DoNotOptimize(seen);
    }
}

void BM_EnumerateTltsym(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long seen = 0;
        for_each_tableau(Family::tltsym, n, [&](const Tableau&) { ++seen; });
        benchmark::DoNotOptimize(seen);
    }
}

void BM_CornerCount(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Int total = corner_count_enumerated(Family::tlt, n);
        benchmark::DoNotOptimize(total);
    }
}

void BM_WeightSum(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Poly2 p = tlt_weight_sum(n);
        benchmark::DoNotOptimize(p);
    }
}

void BM_DotArrowRoundTrip(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<Tableau> pool = generate_all(Family::tlt, n);
    for (auto _ : state) {
        for (const Tableau& t : pool) {
            Tableau back = at_to_tlt(tlt_to_at(t));
            benchmark::DoNotOptimize(back);
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(pool.size()));
}

void BM_CornerToRun(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<Tableau> pool = generate_all(Family::tlt, n);
    for (auto _ : state) {
        long long mapped = 0;
        for (const Tableau& t : pool)
            for (Cell corner : corners(t.base_shape())) {
                RunRef ref = corner_to_run(t, corner);
                benchmark::DoNotOptimize(ref);
                ++mapped;
            }
        benchmark::DoNotOptimize(mapped);
    }
}

void BM_ExportJson(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::string doc = export_tableaux(Family::tlt, n, ExportFormat::json);
        benchmark::DoNotOptimize(doc);
    }
    state.SetBytesProcessed(
        state.iterations() *
        static_cast<long long>(export_tableaux(Family::tlt, n, ExportFormat::json).size()));
}

void BM_SymXyzSum(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Poly3 p = tsym_xyz_sum(n);
        benchmark::DoNotOptimize(p);
    }
}

}  // namespace

BENCHMARK(BM_EnumerateTlt)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumeratePt)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateTltsym)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CornerCount)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightSum)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DotArrowRoundTrip)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CornerToRun)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExportJson)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymXyzSum)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
