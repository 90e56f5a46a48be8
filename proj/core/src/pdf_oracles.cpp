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

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "rsembed/exceptions.hpp"
#include "rsembed/log_det.hpp"
#include "rsembed/parallel.hpp"
#include "rsembed/pdf.hpp"
#include "rsembed/sampling.hpp"

namespace rsembed {

DensityEstimate mc_oracle_pdf(const ComplexVector& y, int m, int k, const SignalParams& params,
                              long num_samples, const RngStream& rng, int workers) {
    if (num_samples < 1)
        throw InvalidDims("mc_oracle_pdf: need num_samples >= 1");
    if (y.size() != m)
        throw DimensionMismatch("mc_oracle_pdf: y must have length M");
    if (!(m >= k && k >= 1))
        throw InvalidDims("mc_oracle_pdf: need M >= K >= 1");
    if (!(params.n0 > 0.0))
        throw InvalidDims("mc_oracle_pdf: need N0 > 0");

    const double pi = std::numbers::pi;
    const double be = params.beta * params.es;
    const double gamma = be / (params.n0 * (be + params.n0));
    const double ynsq = y.squaredNorm();

    // Conditional density given the semi-unitary draw U:
    //   ln p(y|U) = -||y||^2/N0 + gamma ||U^H y||^2 - M ln pi
    //               - K ln(beta Es + N0) - (M-K) ln N0.
    // ||U^H y|| <= ||y||, so shifting by the y-aligned maximum keeps every
    // per-sample weight in (0, 1].
    const double log_shift = -ynsq / params.n0 + gamma * ynsq - m * std::log(pi) -
                             k * std::log(be + params.n0) - (m - k) * std::log(params.n0);

    auto acc = chunked_mc_reduce<MomentAccumulator>(
        num_samples, rng, workers, [&](RngStream& r, long count, MomentAccumulator& a) {
            for (long i = 0; i < count; ++i) {
                const ComplexMatrix u = sample_isotropic_columns(m, k, r);
                const double proj = (u.adjoint() * y).squaredNorm();
                a.add(std::exp(gamma * (proj - ynsq)));
            }
        });

    DensityEstimate est;
    est.num_samples = acc.count;
    const double mean_w = acc.mean();
    est.mean = std::exp(log_shift) * mean_w;
    est.std_error = std::exp(log_shift) * acc.std_error();
    est.log_mean = log_shift + std::log(mean_w);
    return est;
}

DensityEstimate mc_oracle_pdf(const ComplexVector& y, const PdfContext& ctx, long num_samples,
                              const RngStream& rng, int workers) {
    return mc_oracle_pdf(y, ctx.m, ctx.k, ctx.signal(), num_samples, rng, workers);
}

SignedLogReal vandermonde_delta(std::span<const double> values) {
    SignedLogReal out{1, 0.0};
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            const double d = values[j] - values[i];
            if (d == 0.0)
                return SignedLogReal::zero();
            out.sign *= d > 0.0 ? 1 : -1;
            out.log_mag += std::log(std::abs(d));
        }
    return out;
}

double hciz_perturbed_oracle(double y_norm_sq, const PdfContext& ctx, double eps,
                             const HcizSettings& settings) {
    if (!(ctx.gamma > 0.0))
        throw DegenerateGamma("hciz_perturbed_oracle: gamma = 0");
    if (!(y_norm_sq > 0.0))
        throw ZeroNorm("hciz_perturbed_oracle: need ||y||^2 > 0");
    if (!(eps > 0.0 && eps < 0.1))
        throw InvalidDims("hciz_perturbed_oracle: need 0 < eps < 0.1");

    const int m = ctx.m;
    const int k = ctx.k;
    const double t = ctx.gamma * y_norm_sq;

    // Perturbed spectra: the K unit eigenvalues of the projector split along
    // 1 + (j-1) eps, its zeros along (j-K) eps * eps2_scale; the rank-one
    // spectrum of gamma y y^H keeps its head t and splits its zeros along
    // (i-1) eps t.
    std::vector<double> a(static_cast<std::size_t>(m));
    std::vector<double> b(static_cast<std::size_t>(m));
    for (int j = 0; j < k; ++j)
        a[static_cast<std::size_t>(j)] = 1.0 + j * eps;
    for (int j = k; j < m; ++j)
        a[static_cast<std::size_t>(j)] = (j - k + 1) * eps * settings.eps2_scale;
    b[0] = t;
    for (int i = 1; i < m; ++i)
        b[static_cast<std::size_t>(i)] = i * eps * t;

    const double collision_gap = 1e3 * std::numeric_limits<double>::epsilon();
    auto check_distinct = [&](const std::vector<double>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                const double scale = std::max({1.0, std::abs(v[i]), std::abs(v[j])});
                if (std::abs(v[i] - v[j]) < collision_gap * scale)
                    throw EigenvalueCollision("hciz_perturbed_oracle: perturbed eigenvalues collided");
            }
    };
    check_distinct(a);
    check_distinct(b);

    // det(G) with G_ij = exp(b_i a_j): factor exp(b_i a_max) out of row i so
    // the remaining matrix has entries in (0, 1].
    const double a_max = a[static_cast<std::size_t>(k - 1)];
    RealMatrix g(m, m);
    double log_row_shift = 0.0;
    for (int i = 0; i < m; ++i) {
        log_row_shift += b[static_cast<std::size_t>(i)] * a_max;
        for (int j = 0; j < m; ++j)
            g(i, j) = std::exp(b[static_cast<std::size_t>(i)] *
                               (a[static_cast<std::size_t>(j)] - a_max));
    }
    const SignedLogReal det_scaled = log_det_signed(g);
    if (det_scaled.is_zero())
        throw EigenvalueCollision("hciz_perturbed_oracle: det(G) numerically singular");
    const SignedLogReal det_g{det_scaled.sign, det_scaled.log_mag + log_row_shift};

    const SignedLogReal delta_a = vandermonde_delta(a);
    const SignedLogReal delta_b = vandermonde_delta(b);
    if (delta_a.is_zero() || delta_b.is_zero())
        throw EigenvalueCollision("hciz_perturbed_oracle: degenerate Vandermonde");

    if (det_g.sign * delta_a.sign * delta_b.sign != 1)
        throw Error("hciz_perturbed_oracle: determinant ratio lost positivity");

    double log_superfactorial = 0.0;
    for (int i = 1; i <= m - 1; ++i)
        log_superfactorial += log_factorial(i);

    const double pi = std::numbers::pi;
    const double be = ctx.beta * ctx.es;
    const double log_pref = -y_norm_sq / ctx.n0 - k * std::log(pi * (be + ctx.n0)) -
                            (m - k) * std::log(pi * ctx.n0);

    return std::exp(log_pref + log_superfactorial + det_g.log_mag - delta_a.log_mag -
                    delta_b.log_mag);
}

double radial_normalization(const PdfContext& ctx, const QuadratureSettings& settings) {
    if (!(ctx.gamma > 0.0))
        throw DegenerateGamma("radial_normalization: gamma = 0");

    const double pi = std::numbers::pi;
    const int m = ctx.m;
    // The density is bounded by a Gaussian envelope with scale
    // c = beta Es + N0 in ||y||^2; pick the cutoff so the leftover envelope
    // mass is far below the tolerance even after the (c/N0)^(M-K)
    // amplification.
    const double c = ctx.beta * ctx.es + ctx.n0;
    const double u = 90.0 + 10.0 * m + (m - ctx.k) * std::max(0.0, std::log(c / ctx.n0));
    const double r_max = std::sqrt(c * u);

    const double log_sphere = std::numbers::ln2 + m * std::log(pi) - log_factorial(m - 1);
    auto integrand = [&](double r) -> double {
        if (r <= 0.0)
            return 0.0;  // p(0) is finite and r^(2M-1) vanishes
        const double lp = log_pdf(r * r, ctx);
        return std::exp(lp + log_sphere + (2 * m - 1) * std::log(r));
    };

    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, r_max, settings.max_depth, 1e-12, &error);
    if (!(error <= settings.abs_tol))
        throw QuadratureNonConvergence("radial_normalization: error estimate " +
                                       std::to_string(error) + " above tolerance");
    return value;
}

}  // namespace rsembed
