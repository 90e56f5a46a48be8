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

#include "rsembed/rates.hpp"

#include <cmath>
#include <numbers>

#include "rsembed/exceptions.hpp"
#include "rsembed/parallel.hpp"
#include "rsembed/sampling.hpp"

namespace rsembed {

double ue_sum_rate(const SignalParams& params, int k) {
    if (k < 1)
        throw InvalidDims("ue_sum_rate: need K >= 1");
    if (!(params.n0 > 0.0))
        throw InvalidDims("ue_sum_rate: need N0 > 0");
    return k * std::log2(1.0 + params.beta * params.es / params.n0);
}

double cond_entropy_y_given_u(const SignalParams& params, int m, int k) {
    if (!(m >= k && k >= 1))
        throw InvalidDims("cond_entropy_y_given_u: need M >= K >= 1");
    if (!(params.n0 > 0.0))
        throw InvalidDims("cond_entropy_y_given_u: need N0 > 0");
    const double pie = std::numbers::pi * std::numbers::e;
    const double nats =
        k * std::log(pie * (params.beta * params.es + params.n0)) +
        (m - k) * std::log(pie * params.n0);
    return nats / std::numbers::ln2;
}

EntropyEstimate estimate_entropy_y(const PdfContext& ctx, long num_samples, const RngStream& rng,
                                   int workers) {
    if (num_samples < 100)
        throw InvalidDims("estimate_entropy_y: need num_samples >= 100");
    if (!(ctx.gamma > 0.0))
        throw DegenerateGamma("estimate_entropy_y: gamma = 0");

    const SignalParams params = ctx.signal();
    auto acc = chunked_mc_reduce<MomentAccumulator>(
        num_samples, rng, workers, [&](RngStream& r, long count, MomentAccumulator& a) {
            for (long i = 0; i < count; ++i) {
                const TargetChannel target{ctx.beta, sample_isotropic_columns(ctx.m, ctx.k, r)};
                const ComplexVector y = sample_received_vector(target, params, r);
                const double ynsq = y.squaredNorm();
                const double lp = ynsq > 0.0 ? log_pdf(ynsq, ctx) : log_pdf_zero_limit(ctx);
                a.add(-lp / std::numbers::ln2);
            }
        });
    return EntropyEstimate{acc.mean(), acc.std_error(), acc.count};
}

std::pair<double, double> rs_rate(const PdfContext& ctx, long num_samples, const RngStream& rng,
                                  int workers) {
    const EntropyEstimate h = estimate_entropy_y(ctx, num_samples, rng, workers);
    const double cond = cond_entropy_y_given_u(ctx.signal(), ctx.m, ctx.k);
    return {h.mean_bits - cond, h.std_error_bits};
}

RateBreakdown rate_breakdown(const PdfContext& ctx, long num_samples, const RngStream& rng,
                             int workers) {
    const auto [rs, rs_se] = rs_rate(ctx, num_samples, rng, workers);
    RateBreakdown out;
    out.ue_rate_bits = ue_sum_rate(ctx.signal(), ctx.k);
    out.rs_rate_bits = rs;
    out.total_rate_bits = out.ue_rate_bits + rs;
    out.rs_rate_std_error = rs_se;
    return out;
}

EntropyEstimate estimate_entropy_y_unitary(const SignalParams& params, int m, long num_samples,
                                           const RngStream& rng, int workers) {
    if (m < 1)
        throw InvalidDims("estimate_entropy_y_unitary: need M >= 1");
    if (num_samples < 100)
        throw InvalidDims("estimate_entropy_y_unitary: need num_samples >= 100");
    const double c = params.beta * params.es + params.n0;
    const double log_height = -static_cast<double>(m) * std::log(std::numbers::pi * c);
    auto acc = chunked_mc_reduce<MomentAccumulator>(
        num_samples, rng, workers, [&](RngStream& r, long count, MomentAccumulator& a) {
            for (long i = 0; i < count; ++i) {
                const TargetChannel target{params.beta, sample_haar_unitary(m, r)};
                const ComplexVector y = sample_received_vector(target, params, r);
                const double lp = -y.squaredNorm() / c + log_height;
                a.add(-lp / std::numbers::ln2);
            }
        });
    return EntropyEstimate{acc.mean(), acc.std_error(), acc.count};
}

std::pair<double, double> rs_rate_unitary(const SignalParams& params, int m, long num_samples,
                                          const RngStream& rng, int workers) {
    const EntropyEstimate h = estimate_entropy_y_unitary(params, m, num_samples, rng, workers);
    const double cond = cond_entropy_y_given_u(params, m, m);
    return {h.mean_bits - cond, h.std_error_bits};
}

MuxGainFit mux_gain_estimate(std::span<const std::pair<double, RateBreakdown>> points) {
    if (points.size() < 2)
        throw FewerThanTwoPoints("mux_gain_estimate: need at least two SNR points");

    // x = log2(Es/N0) from the dB value.
    const double db_to_log2 = std::numbers::ln10 / (10.0 * std::numbers::ln2);
    double x_mean = 0.0;
    for (const auto& p : points)
        x_mean += p.first * db_to_log2;
    x_mean /= static_cast<double>(points.size());

    double sxx = 0.0;
    double sxy_total = 0.0;
    double sxy_rs = 0.0;
    for (const auto& p : points) {
        const double dx = p.first * db_to_log2 - x_mean;
        sxx += dx * dx;
        sxy_total += dx * p.second.total_rate_bits;
        sxy_rs += dx * p.second.rs_rate_bits;
    }
    if (!(sxx > 0.0))
        throw FewerThanTwoPoints("mux_gain_estimate: SNR points must be distinct");
    return MuxGainFit{sxy_total / sxx, sxy_rs / sxx};
}

}  // namespace rsembed
