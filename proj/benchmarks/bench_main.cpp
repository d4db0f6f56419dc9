// Copyright 2026 The egc Authors
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

#include <benchmark/benchmark.h>

#include "egc/emitter_compiler.hpp"
#include "egc/fusion.hpp"
#include "egc/threshold.hpp"

namespace {

using namespace egc;

GraphCode chain_code(std::size_t n) {
    std::string ops;
    for (std::size_t i = 0; i < n; ++i) ops += (i % 2 ? 'P' : 'L');
    return code_from_progenitor(graph_from_generation_ops(parse_generation_ops(ops)));
}

void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_single_emitter_progenitors(state.range(0)));
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 8, 2);

void BM_AnalyzerBuild(benchmark::State& state) {
    auto code = chain_code(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(FusionAnalyzer(code));
}
BENCHMARK(BM_AnalyzerBuild)->DenseRange(4, 8, 2);

void BM_ErasureScan(benchmark::State& state) {
    auto code = chain_code(state.range(0));
    FusionAnalyzer analyzer(code);
    std::size_t n = code.num_code_qubits();
    for (auto _ : state)
        for (std::uint32_t bits = 0; bits < (1U << n); ++bits)
            benchmark::DoNotOptimize(analyzer.analyze(FailureBasis(n, bits), 0.5, false));
}
BENCHMARK(BM_ErasureScan)->DenseRange(4, 8, 2);

void BM_LossThreshold(benchmark::State& state) {
    auto code = chain_code(state.range(0));
    BiasConfig bias;
    bias.p_tilde_randomized = 0.14306;
    for (auto _ : state) benchmark::DoNotOptimize(loss_threshold(code, bias));
}
BENCHMARK(BM_LossThreshold)->DenseRange(4, 8, 2);

void BM_ErrorModel(benchmark::State& state) {
    auto code = chain_code(state.range(0));
    ErrorModel model(code, FailureBasis(code.num_code_qubits(), 0));
    for (auto _ : state) benchmark::DoNotOptimize(model.evaluate(0.97, 0.5, 0.01));
}
BENCHMARK(BM_ErrorModel)->DenseRange(4, 8, 2);

void BM_CompileAndVerify(benchmark::State& state) {
    auto inner = chain_code(state.range(0));
    auto outer = parse_generation_ops("LPLLPLPPL");
    auto target = concatenated_graph(outer, inner);
    for (auto _ : state) {
        auto seq = compile(outer, inner, EmitterMode::kTwoEmitter);
        benchmark::DoNotOptimize(verify_sequence(seq, target));
    }
}
BENCHMARK(BM_CompileAndVerify)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
