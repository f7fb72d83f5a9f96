// Compares the serial reference sweep kernel against the OpenMP kernel.

#include <benchmark/benchmark.h>

#include "sqlaser/sweep.hpp"

namespace {

using namespace sqlaser;

SpectrumConfig bench_config() {
    SpectrumConfig cfg;
    cfg.params.g = 1.0e8;
    cfg.params.delta_c = 0.0;
    cfg.params.theta_p = 3.141592653589793;
    cfg.params.kappa = 4.3e8;
    cfg.reservoir = SqueezedState(0.99, 0.0);
    cfg.damping = DampingModel{2.1, 1.15};
    return cfg;
}

void bm_sweep_serial(benchmark::State& state) {
    const SpectrumConfig cfg = bench_config();
    const auto grid = make_grid(1e5, 1e10, static_cast<std::size_t>(state.range(0)), true);
    for (auto _ : state) {
        auto out = sweep_spectrum_serial(cfg, grid);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_sweep_openmp(benchmark::State& state) {
    const SpectrumConfig cfg = bench_config();
    const auto grid = make_grid(1e5, 1e10, static_cast<std::size_t>(state.range(0)), true);
    for (auto _ : state) {
        auto out = sweep_spectrum(cfg, grid);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(bm_sweep_serial)->Arg(1000)->Arg(100000)->Arg(1000000);
BENCHMARK(bm_sweep_openmp)->Arg(1000)->Arg(100000)->Arg(1000000);

} // namespace

BENCHMARK_MAIN();
