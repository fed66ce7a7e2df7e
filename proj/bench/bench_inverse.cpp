#include <benchmark/benchmark.h>

#include "vandinv/nodes.hpp"
#include "vandinv/stability.hpp"
#include "vandinv/vandermonde.hpp"

using namespace vandinv;

namespace {

NodeSet roots(benchmark::State& state) {
    return generate_nodes({NodeFamily::roots_of_unity, static_cast<std::size_t>(state.range(0))});
}

void BM_ClosedFormSerial(benchmark::State& state) {
    const NodeSet nodes = roots(state);
    for (auto _ : state) benchmark::DoNotOptimize(inverse_closed_form(nodes, EspMethod::proposed, Execution::serial));
}

void BM_ClosedFormParallel(benchmark::State& state) {
    const NodeSet nodes = roots(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(inverse_closed_form(nodes, EspMethod::proposed, Execution::parallel));
}

void BM_ClosedFormTraub(benchmark::State& state) {
    const NodeSet nodes = roots(state);
    for (auto _ : state) benchmark::DoNotOptimize(inverse_closed_form(nodes, EspMethod::traub, Execution::serial));
}

void BM_WaProduct(benchmark::State& state) {
    const NodeSet nodes = roots(state);
    for (auto _ : state) benchmark::DoNotOptimize(inverse_wa_product(nodes, EspMethod::proposed));
}

void BM_Baseline(benchmark::State& state) {
    const NodeSet nodes = roots(state);
    for (auto _ : state) benchmark::DoNotOptimize(inverse_elimination_baseline(nodes));
}

void BM_SweepSerial(benchmark::State& state) {
    SweepConfig cfg;
    cfg.trials = 2;
    cfg.exec = Execution::serial;
    for (auto _ : state) benchmark::DoNotOptimize(noise_sweep(cfg));
}

void BM_SweepParallel(benchmark::State& state) {
    SweepConfig cfg;
    cfg.trials = 2;
    cfg.exec = Execution::parallel;
    for (auto _ : state) benchmark::DoNotOptimize(noise_sweep(cfg));
}

}  // namespace

BENCHMARK(BM_ClosedFormSerial)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_ClosedFormParallel)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_ClosedFormTraub)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_WaProduct)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_Baseline)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
