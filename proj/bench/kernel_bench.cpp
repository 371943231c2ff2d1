// Copyright 2026 The qopt-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Production kernels (OpenMP) measured against their serial reference
// twins from qopt::ref. Run with --benchmark_filter=... to narrow.

#include <benchmark/benchmark.h>

#include "qopt/graph.hpp"
#include "qopt/hamiltonian.hpp"
#include "qopt/qaoa.hpp"
#include "qopt/reference.hpp"

namespace {

qopt::GraphInstance instance(int n) { return qopt::generate_3_regular(n, 7); }

qopt::AnsatzParams two_round_params() {
    qopt::AnsatzParams params;
    params.betas = {0.35, 0.20};
    params.gammas = {0.60, 0.90};
    return params;
}

void BM_max_cut(benchmark::State &state) {
    qopt::GraphInstance g = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        g.optimal_cut_size.reset();
        benchmark::DoNotOptimize(qopt::exact_max_cut(g));
    }
}

void BM_max_cut_serial(benchmark::State &state) {
    const qopt::GraphInstance g = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qopt::ref::max_cut_serial(g));
    }
}

void BM_cost_table(benchmark::State &state) {
    const qopt::GraphInstance g = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qopt::diagonal_cost_table(g));
    }
}

void BM_cost_table_serial(benchmark::State &state) {
    const qopt::GraphInstance g = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qopt::ref::cost_table_serial(g));
    }
}

void BM_evolve_ansatz(benchmark::State &state) {
    const qopt::GraphInstance g = instance(static_cast<int>(state.range(0)));
    const qopt::DiagonalCostTable costs = qopt::diagonal_cost_table(g);
    const qopt::AnsatzParams params = two_round_params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qopt::evolve_ansatz(costs, params));
    }
}

void BM_evolve_ansatz_serial(benchmark::State &state) {
    const qopt::GraphInstance g = instance(static_cast<int>(state.range(0)));
    const qopt::DiagonalCostTable costs = qopt::diagonal_cost_table(g);
    const qopt::AnsatzParams params = two_round_params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qopt::ref::evolve_ansatz_serial(costs, params));
    }
}

BENCHMARK(BM_max_cut)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_max_cut_serial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cost_table)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cost_table_serial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_evolve_ansatz)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_evolve_ansatz_serial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
