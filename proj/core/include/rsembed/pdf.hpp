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
#include <vector>

#include "rsembed/channel.hpp"
#include "rsembed/rng.hpp"
#include "rsembed/signed_log.hpp"
#include "rsembed/types.hpp"

namespace rsembed {

/// Precomputed evaluation context for the received-vector density p(y) of an
/// orthogonalized channel with an isotropically distributed semi-unitary
/// target.
///
/// The density depends on y only through t = gamma * ||y||^2 and factors as
///
///   ln p(y) = -||y||^2 / N0 + log_prefactor_const + ln S(t),
///
/// where S(t) = parity * det(Z(t)) / t^(M-1) is strictly positive. Z(t) has
/// the exponential e^t only in its first row; rows 2..M are integer-valued
/// constants, so det(Z) expands along row one with M constant cofactors.
/// Construction computes those cofactors exactly (big-integer arithmetic) and
/// additionally derives the exact Taylor coefficients of S around t = 0; the
/// leading (M-1)-fold zero of det(Z) cancels analytically, which is what
/// keeps small-t evaluation (low SNR, small ||y||) free of cancellation.
/// Evaluation is O(M) per point and safe for t in the tens of thousands.
///
/// Treat instances as immutable after make_pdf_context; they are then freely
/// shareable across threads.
struct PdfContext {
    int m = 0;
    int k = 0;
    double beta = 0.0;
    double es = 0.0;
    double n0 = 0.0;
    double gamma = 0.0;  // beta*Es / (N0 * (beta*Es + N0))

    /// log of all y-independent factors of the density.
    double log_prefactor_const = 0.0;

    /// First-row minors C_j (j = 1..M) of the constant block of Z, exact.
    std::vector<SignedLogReal> cofactors;

    /// S(t) = |r_lead| * sum_l rho_l t^l near t = 0; rho_0 = 1, exact
    /// rational coefficients rounded to double.
    double series_log_lead = 0.0;
    std::vector<double> series_coeffs;

    /// log of the y-independent part of the high-SNR (N0 -> 0) limit density.
    double high_snr_log_const = 0.0;

    SignalParams signal() const { return SignalParams{es, n0, beta}; }
};

/// Builds the context; O(M^3) big-integer work once, after which density
/// evaluations are O(M). Requires M > K >= 1 and N0 > 0. Es = 0 (or beta = 0)
/// is allowed at construction, but density evaluation then reports
/// DegenerateGamma and callers must use the pure-noise Gaussian instead.
PdfContext make_pdf_context(const SignalParams& params, int m, int k);

/// Parameters of the M x M determinant matrix Z at t = gamma * ||y||^2.
struct ZMatrixSpec {
    int m = 0;
    int k = 0;
    double t = 0.0;
};

/// Dense matrix of signed-log values (row-major); entries of Z routinely
/// exceed double range through the e^t and factorial terms.
struct SignedLogMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SignedLogReal> entries;

    SignedLogReal& operator()(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const SignedLogReal& operator()(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }
};

/// The matrix Z(t): row one holds t^(j-1) e^t (j <= K) and t^(j-K-1)
/// (K < j <= M, with the 0^0 = 1 convention at t = 0); the remaining rows are
/// the y-independent factorial-ratio block.
SignedLogMatrix z_matrix(const ZMatrixSpec& spec);

/// ln S(t): the scaled first-row cofactor expansion of det(Z). Uses the exact
/// Taylor series for small t and signed log-sum-exp of the cofactor terms
/// otherwise.
double log_det_z_scaled(const PdfContext& ctx, double t);

/// ln p(y) as a function of ||y||^2. Throws DegenerateGamma when gamma = 0
/// and ZeroNorm at y = 0 (use log_pdf_zero_limit for the t -> 0+ limit).
double log_pdf(double y_norm_sq, const PdfContext& ctx);

/// The t -> 0+ limit of ln p: the density height at y = 0, which equals the
/// Gaussian height 1 / (pi^M (beta Es + N0)^K N0^(M-K)).
double log_pdf_zero_limit(const PdfContext& ctx);

/// ln of the N0 -> 0 limit density at fixed y: only the j = K cofactor
/// survives in row one and the Gaussian envelope tightens to exp(-||y||^2 /
/// (beta Es)). log_pdf converges to this pointwise as N0 -> 0.
double log_pdf_high_snr(double y_norm_sq, const PdfContext& ctx);

/// Monte-Carlo density estimate from the defining expectation: the average
/// over isotropic semi-unitary draws of the conditional Gaussian density
/// CN(y; 0, beta*Es*U*U^H + N0*I), with the symbol integral done in closed
/// form. Deterministic for a given (seed, stream) at any worker count.
struct DensityEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    double log_mean = 0.0;  // robust companion of mean for extreme magnitudes
    long num_samples = 0;
};

DensityEstimate mc_oracle_pdf(const ComplexVector& y, int m, int k, const SignalParams& params,
                              long num_samples, const RngStream& rng, int workers = 1);

DensityEstimate mc_oracle_pdf(const ComplexVector& y, const PdfContext& ctx, long num_samples,
                              const RngStream& rng, int workers = 1);

/// Vandermonde product prod_{i<j} (v[j] - v[i]) over the sequence as given
/// (no sorting), in signed-log form.
SignedLogReal vandermonde_delta(std::span<const double> values);

struct HcizSettings {
    /// Scale applied to the ladder that splits the zero eigenvalues of the
    /// projector spectrum; kept away from 1 so the two ladders never share
    /// values.
    double eps2_scale = 0.5;
};

/// Pre-limit determinant-ratio evaluation of the density: both degenerate
/// spectra are perturbed to distinct eigenvalues (1 + (j-1)*eps ladder on the
/// K ones, eps-scaled ladders on the zeros) and the exact integral formula
/// det(G) / (Delta(b) Delta(a)) is evaluated directly. Converges to
/// exp(log_pdf) as eps -> 0; first-order in eps.
double hciz_perturbed_oracle(double y_norm_sq, const PdfContext& ctx, double eps,
                             const HcizSettings& settings = {});

struct QuadratureSettings {
    double abs_tol = 1e-8;  // acceptable absolute error estimate
    int max_depth = 15;     // adaptive subdivision depth
};

/// Integral of the density over C^M, reduced to one radial dimension:
/// int_0^inf p(r) * (2 pi^M / (M-1)!) * r^(2M-1) dr. Equals 1 when the
/// implementation is consistent.
double radial_normalization(const PdfContext& ctx, const QuadratureSettings& settings = {});

}  // namespace rsembed
