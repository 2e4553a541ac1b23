/*
   Copyright 2026 The obda Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "obda/aggregate.hpp"
#include "obda/channel.hpp"
#include "obda/harness.hpp"

using namespace obda;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) {
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(max_threads()));
}

void BM_PerrMonteCarlo(benchmark::State& state) {
    const Exec exec = exec_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(perr_monte_carlo(RunMode::fading_imperfect_csi, 100, 1.0, 10.0, 0.9, 0.02,
                                                  CsiErrorModel{}, 20000, 1, 0, exec));
    state.SetItemsProcessed(state.iterations() * 20000);
    label(state);
}

void BM_PowerCheck(benchmark::State& state) {
    const Exec exec = exec_of(state);
    const auto policy = derive_policy(1.0, 1000, 0.5, ChannelMode::fading_perfect_csi);
    for (auto _ : state) benchmark::DoNotOptimize(empirical_power_check(policy, 1 << 20, 3, exec));
    state.SetItemsProcessed(state.iterations() * (1 << 20));
    label(state);
}

void BM_ChannelAndSuperpose(benchmark::State& state) {
    const Exec exec = exec_of(state);
    const std::size_t K = 100, M = 1000;
    const auto policy = derive_policy(1.0, M, 0.5, ChannelMode::fading_imperfect_csi);
    const CsiErrorModel csi{0.05};
    std::vector<SignVector> signs;
    for (std::size_t k = 0; k < K; ++k) {
        std::vector<std::int8_t> s(M);
        for (std::size_t i = 0; i < M; ++i) s[i] = (i * 7 + k * 13) % 3 == 0 ? -1 : 1;
        signs.emplace_back(std::move(s));
    }
    const TxFrame frame = build_tx_frame(signs, Modulation::bpsk);
    std::uint32_t round = 0;
    for (auto _ : state) {
        const auto ch = sample_channel(K, M, policy, csi, SymbolKey{1, round, 0}, exec);
        rng::Stream noise(1, rng::Purpose::noise, round++, 0);
        benchmark::DoNotOptimize(air_superpose(frame, 0, ch, policy, 0.01, noise, exec));
    }
    state.SetItemsProcessed(state.iterations() * K * M);
    label(state);
}

void BM_TrainingRound(benchmark::State& state) {
    const Exec exec = exec_of(state);
    RunConfig cfg;
    cfg.K = 100;
    cfg.N = 5;
    cfg.q = 200;
    cfg.samples_per_device = 50;
    cfg.g_th = 0.5;
    const Problem problem = build_problem(cfg);
    for (auto _ : state) benchmark::DoNotOptimize(run_feel(cfg, problem, RunMode::fading_perfect_csi, exec));
    state.SetItemsProcessed(state.iterations() * cfg.N);
    label(state);
}

} // namespace

BENCHMARK(BM_PerrMonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChannelAndSuperpose)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrainingRound)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
