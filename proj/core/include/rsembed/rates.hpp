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

#pragma once

#include <span>
#include <utility>

#include "rsembed/channel.hpp"
#include "rsembed/pdf.hpp"
#include "rsembed/rng.hpp"

namespace rsembed {

/// All rates and entropies below are in bits (log base 2); internal
/// computation is in nats and converts only here.

/// Monte-Carlo differential entropy estimate of the received vector.
struct EntropyEstimate {
    double mean_bits = 0.0;
    double std_error_bits = 0.0;  // sample std-dev / sqrt(num_samples)
    long num_samples = 0;
};

/// The mutual-information split at one operating point: user sum rate
/// I(y;s|U), surface rate I(y;U), and their chain-rule total I(y;s,U).
struct RateBreakdown {
    double ue_rate_bits = 0.0;
    double rs_rate_bits = 0.0;
    double total_rate_bits = 0.0;  // ue + rs by construction
    double rs_rate_std_error = 0.0;
};

/// User sum rate over the orthogonalized channel: K log2(1 + beta Es / N0).
double ue_sum_rate(const SignalParams& params, int k);

/// Conditional differential entropy h(y | U) in bits:
/// [K ln(pi e (beta Es + N0)) + (M-K) ln(pi e N0)] / ln 2. Exact.
double cond_entropy_y_given_u(const SignalParams& params, int m, int k);

/// h(y) estimated by averaging -log2 p(y) over model draws (fresh isotropic
/// semi-unitary channel per sample). Deterministic for a given stream at any
/// worker count. Requires num_samples >= 100.
EntropyEstimate estimate_entropy_y(const PdfContext& ctx, long num_samples, const RngStream& rng,
                                   int workers = 1);

/// I(y;U) = h(y) - h(y|U) and its Monte-Carlo standard error (h(y|U) is
/// exact, so the error is that of the entropy estimate).
std::pair<double, double> rs_rate(const PdfContext& ctx, long num_samples, const RngStream& rng,
                                  int workers = 1);

/// Assembles the full decomposition at one operating point.
RateBreakdown rate_breakdown(const PdfContext& ctx, long num_samples, const RngStream& rng,
                             int workers = 1);

/// K = M boundary, where the closed-form density does not apply: y is
/// exactly CN(0, (beta Es + N0) I) for every unitary draw, so the density
/// under the expectation is the Gaussian one with zero variance.
EntropyEstimate estimate_entropy_y_unitary(const SignalParams& params, int m, long num_samples,
                                           const RngStream& rng, int workers = 1);

std::pair<double, double> rs_rate_unitary(const SignalParams& params, int m, long num_samples,
                                          const RngStream& rng, int workers = 1);

/// Least-squares slopes of the total and surface rates versus log2(Es/N0)
/// over (snr_db, breakdown) points; at high SNR these estimate the
/// multiplexing gains M and M - K.
struct MuxGainFit {
    double total_slope = 0.0;
    double rs_slope = 0.0;
};

MuxGainFit mux_gain_estimate(std::span<const std::pair<double, RateBreakdown>> points);

}  // namespace rsembed
