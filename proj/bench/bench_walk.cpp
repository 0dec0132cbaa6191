// Compares the OpenMP kernels against their serial references: the full
// amplitude vector and the leakage grid scan.

#include <benchmark/benchmark.h>

#include <map>

#include "pgfr/families.hpp"
#include "pgfr/simulator.hpp"

namespace {

const pgfr::CayleyGraph& test_graph(std::int64_t n) {
    static auto* graphs = new std::map<std::int64_t, pgfr::CayleyGraph>;
    auto it = graphs->find(n);
    if (it == graphs->end()) it = graphs->emplace(n, pgfr::complement_cycle(n)).first;
    return it->second;
}

void bm_amplitudes_serial(benchmark::State& state) {
    const auto& g = test_graph(state.range(0));
    g.spectrum();  // cache fill stays out of the timing
    double t = 0.0;
    for (auto _ : state) {
        t += 0.37;
        benchmark::DoNotOptimize(pgfr::amplitudes_serial(g, 0, t));
    }
}

void bm_amplitudes_openmp(benchmark::State& state) {
    const auto& g = test_graph(state.range(0));
    g.spectrum();
    double t = 0.0;
    for (auto _ : state) {
        t += 0.37;
        benchmark::DoNotOptimize(pgfr::amplitudes(g, 0, t));
    }
}

pgfr::SearchConfig scan_config() {
    pgfr::SearchConfig cfg;
    cfg.t_max = 200.0;
    cfg.grid_points = 20000;
    cfg.refine_top = 8;
    cfg.refine_iters = 30;
    return cfg;
}

void bm_scan_serial(benchmark::State& state) {
    const auto& g = test_graph(state.range(0));
    g.spectrum();
    for (auto _ : state)
        benchmark::DoNotOptimize(pgfr::search_times_serial(g, 0, state.range(0) / 2, scan_config()));
}

void bm_scan_openmp(benchmark::State& state) {
    const auto& g = test_graph(state.range(0));
    g.spectrum();
    for (auto _ : state)
        benchmark::DoNotOptimize(pgfr::search_times(g, 0, state.range(0) / 2, scan_config()));
}

}  // namespace

BENCHMARK(bm_amplitudes_serial)->Arg(64)->Arg(256);
BENCHMARK(bm_amplitudes_openmp)->Arg(64)->Arg(256);
BENCHMARK(bm_scan_serial)->Arg(64)->Arg(256);
BENCHMARK(bm_scan_openmp)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
