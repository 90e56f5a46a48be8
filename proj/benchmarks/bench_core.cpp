// SPDX-License-Identifier: Apache-2.0
//
// rsembed - reconfigurable-surface channel orthogonalization and
// information-embedding simulator
// Copyright (C) 2026 rsembed contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include <vector>

#include "rsembed/pdf.hpp"
#include "rsembed/rates.hpp"
#include "rsembed/sampling.hpp"
#include "rsembed/solver.hpp"

using namespace rsembed;

static void BM_SignedLogSum(benchmark::State& state) {
    RngStream rng(1, 0);
    std::vector<SignedLogReal> terms;
    for (int i = 0; i < 64; ++i)
        terms.push_back(SignedLogReal{rng.uniform() < 0.5 ? -1 : 1, 100.0 * rng.uniform()});
    for (auto _ : state)
        benchmark::DoNotOptimize(signed_log_sum(terms));
}
BENCHMARK(BM_SignedLogSum);

static void BM_SampleHaarUnitary(benchmark::State& state) {
    RngStream rng(2, 0);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_haar_unitary(m, rng));
}
BENCHMARK(BM_SampleHaarUnitary)->Arg(2)->Arg(4)->Arg(8);

static void BM_IsotropicColumns(benchmark::State& state) {
    RngStream rng(3, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_isotropic_columns(4, 2, rng));
}
BENCHMARK(BM_IsotropicColumns);

static void BM_MakePdfContext(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(make_pdf_context({1.0, 0.1, 1.0}, m, m / 2));
}
BENCHMARK(BM_MakePdfContext)->Arg(4)->Arg(8)->Arg(16);

static void BM_LogPdf(benchmark::State& state) {
    const PdfContext ctx = make_pdf_context({1.0, 0.01, 1.0}, 4, 2);
    double ynsq = 0.25;
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_pdf(ynsq, ctx));
        ynsq = ynsq < 400.0 ? ynsq * 1.01 : 0.25;  // sweep both branches
    }
}
BENCHMARK(BM_LogPdf);

static void BM_EntropySamplePath(benchmark::State& state) {
    const PdfContext ctx = make_pdf_context({1.0, 0.01, 1.0}, 4, 2);
    const SignalParams params = ctx.signal();
    RngStream rng(4, 0);
    for (auto _ : state) {
        const TargetChannel target{ctx.beta, sample_isotropic_columns(4, 2, rng)};
        const ComplexVector y = sample_received_vector(target, params, rng);
        benchmark::DoNotOptimize(log_pdf(y.squaredNorm(), ctx));
    }
}
BENCHMARK(BM_EntropySamplePath);

static void BM_SolveAris(benchmark::State& state) {
    RngStream rng(5, 0);
    const SystemDims dims{3, 2, 8};
    const ChannelTriple ch = generate_channels(dims, rng);
    const TargetChannel target = sample_haar_target(3, 2, 1.0, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_aris(ch, target));
}
BENCHMARK(BM_SolveAris);

static void BM_HcizOracle(benchmark::State& state) {
    const PdfContext ctx = make_pdf_context({1.0, 0.25, 1.0}, 4, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(hciz_perturbed_oracle(3.7, ctx, 1e-3));
}
BENCHMARK(BM_HcizOracle);

BENCHMARK_MAIN();
