#include <benchmark/benchmark.h>

#include <omp.h>

#include "ascurv/angle_table.hpp"
#include "ascurv/cone_sampler.hpp"
#include "ascurv/generators.hpp"

using namespace ascurv;

namespace {

ConeSampler corner_cone(int dim) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            g(i, j) = 0.3;
        }
    }
    return ConeSampler(g);
}

void BM_ConeHitsSerial(benchmark::State& state) {
    const ConeSampler cone = corner_cone(static_cast<int>(state.range(0)));
    const auto samples = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_cone_hits_serial(cone, StreamKey{1, 2, 3}, samples));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples));
}

void BM_ConeHitsParallel(benchmark::State& state) {
    const ConeSampler cone = corner_cone(static_cast<int>(state.range(0)));
    const auto samples = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_cone_hits_parallel(cone, StreamKey{1, 2, 3}, samples));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples));
    state.counters["threads"] = omp_get_max_threads();
}

void table_fill(benchmark::State& state, AngleTable::Fill fill) {
    const auto e = simplex_boundary(static_cast<int>(state.range(0)));
    AngleConfig cfg;
    cfg.samples = 100'000;
    const auto pairs = all_angle_pairs(e.complex());
    for (auto _ : state) {
        const AngleTable table(e, pairs, cfg, fill);
        benchmark::DoNotOptimize(table.values().data());
    }
    state.counters["pairs"] = static_cast<double>(pairs.size());
}

void BM_AngleTableSerial(benchmark::State& state) {
    table_fill(state, AngleTable::Fill::serial);
}

void BM_AngleTableParallel(benchmark::State& state) {
    table_fill(state, AngleTable::Fill::parallel);
}

}  // namespace

BENCHMARK(BM_ConeHitsSerial)->Args({3, 1 << 20})->Args({5, 1 << 20})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConeHitsParallel)->Args({3, 1 << 20})->Args({5, 1 << 20})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AngleTableSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AngleTableParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
