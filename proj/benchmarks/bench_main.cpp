#include <benchmark/benchmark.h>

#include "hexcpg/experiment.hpp"

using namespace hexcpg;

namespace {

TrialConfig default_config(std::uint64_t seed) {
    TrialConfig cfg;
    cfg.seed = seed;
    cfg.hexapod = canonical_hexapod();
    return cfg;
}

void BM_StepNetwork(benchmark::State& state) {
    RngStream rng(1);
    LearningParams lp;
    const WeightSet w = init_weights(rng, lp);
    NeuronParams np;
    NetworkState net = initial_network_state();
    bool gyro = false;
    for (auto _ : state) {
        const SpikeVector fired = step_network(net, w, np, gyro);
        gyro = fired.count() > 3;
        benchmark::DoNotOptimize(net);
    }
}
BENCHMARK(BM_StepNetwork);

void BM_EvaluateBalance(benchmark::State& state) {
    const HexapodModel model = canonical_hexapod();
    unsigned long mask = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_balance(model, SpikeVector(mask)));
        mask = (mask + 1) & 0x3F;
    }
}
BENCHMARK(BM_EvaluateBalance);

void BM_UpdateWeights(benchmark::State& state) {
    RngStream rng(2);
    LearningParams lp;
    WeightSet w = init_weights(rng, lp);
    const SpikeVector post(0b010101), pre(0b101010);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            update_weights(w, post, pre, true, false, 2.5, rng, lp));
    }
}
BENCHMARK(BM_UpdateWeights);

void BM_RunTrial(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const TrialResult r = run_trial(default_config(seed++));
        benchmark::DoNotOptimize(r.total_spikes);
    }
}
BENCHMARK(BM_RunTrial)->Unit(benchmark::kMillisecond);

void BM_Sweep100(benchmark::State& state) {
    const TrialConfig base = default_config(1);
    for (auto _ : state) {
        const SweepReport report = run_sweep({0.1}, 100, base, 2);
        benchmark::DoNotOptimize(report.per_rate[0].tripod);
    }
}
BENCHMARK(BM_Sweep100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
