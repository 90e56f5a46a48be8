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

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "rsembed/exceptions.hpp"
#include "rsembed/pdf.hpp"

namespace rsembed {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt big_factorial(int n) {
    BigInt v = 1;
    for (int i = 2; i <= n; ++i)
        v *= i;
    return v;
}

// log of |v| for a nonzero big integer, via the top 53 bits.
double log_big_mag(const BigInt& v) {
    BigInt a = abs(v);
    const unsigned bits = msb(a);  // index of the highest set bit
    if (bits <= 52)
        return std::log(a.convert_to<double>());
    const unsigned shift = bits - 52;
    const double top = BigInt(a >> shift).convert_to<double>();
    return std::log(top) + static_cast<double>(shift) * std::numbers::ln2;
}

SignedLogReal slr_from_big(const BigInt& v) {
    if (v == 0)
        return SignedLogReal::zero();
    return SignedLogReal{v > 0 ? 1 : -1, log_big_mag(v)};
}

double log_big_rat_mag(const BigRat& v) {
    return log_big_mag(numerator(v)) - log_big_mag(denominator(v));
}

// Fraction-free Bareiss elimination; exact integer determinant.
BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0)
        return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int p = 0; p + 1 < n; ++p) {
        if (a[p][p] == 0) {
            int q = p + 1;
            while (q < n && a[q][p] == 0)
                ++q;
            if (q == n)
                return 0;
            std::swap(a[p], a[q]);
            sign = -sign;
        }
        for (int i = p + 1; i < n; ++i)
            for (int j = p + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
        prev = a[p][p];
    }
    return sign * a[n - 1][n - 1];
}

// Rows 2..M of Z: entry(itil, j) with itil = i-1 in 1..M-1 and j in 1..M.
// For j <= K the value is the falling factorial (itil-1)!/(itil-j)! when
// itil >= j; for j > K it is (itil-1)! on the shifted diagonal itil = j - K.
BigInt constant_block_entry(int itil, int j, int k) {
    if (j <= k)
        return itil >= j ? big_factorial(itil - 1) / big_factorial(itil - j) : BigInt(0);
    return itil == j - k ? big_factorial(itil - 1) : BigInt(0);
}

// Minor of the constant block with column j (1-based) removed.
BigInt first_row_minor(int m, int k, int j) {
    std::vector<std::vector<BigInt>> sub(static_cast<std::size_t>(m - 1));
    for (int itil = 1; itil <= m - 1; ++itil) {
        auto& row = sub[static_cast<std::size_t>(itil - 1)];
        row.reserve(static_cast<std::size_t>(m - 1));
        for (int col = 1; col <= m; ++col)
            if (col != j)
                row.push_back(constant_block_entry(itil, col, k));
    }
    return bareiss_det(std::move(sub));
}

int first_row_sign(int j) { return (j % 2 == 1) ? 1 : -1; }  // (-1)^(1+j)

}  // namespace

PdfContext make_pdf_context(const SignalParams& params, int m, int k) {
    if (!(m > k && k >= 1))
        throw InvalidDims("make_pdf_context: need M > K >= 1 (got M=" + std::to_string(m) +
                          ", K=" + std::to_string(k) + ")");
    if (!(params.n0 > 0.0))
        throw InvalidDims("make_pdf_context: need N0 > 0");
    if (params.es < 0.0 || params.beta < 0.0)
        throw InvalidDims("make_pdf_context: need Es >= 0 and beta >= 0");

    PdfContext ctx;
    ctx.m = m;
    ctx.k = k;
    ctx.beta = params.beta;
    ctx.es = params.es;
    ctx.n0 = params.n0;
    const double be = params.beta * params.es;
    ctx.gamma = be / (params.n0 * (be + params.n0));

    // Exact first-row cofactor minors of the constant block.
    std::vector<BigInt> minors(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j)
        minors[static_cast<std::size_t>(j - 1)] = first_row_minor(m, k, j);
    ctx.cofactors.resize(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j)
        ctx.cofactors[static_cast<std::size_t>(j - 1)] = slr_from_big(minors[static_cast<std::size_t>(j - 1)]);

    // Exact Taylor coefficients of parity * det(Z) / t^(M-1) around t = 0.
    // det(Z) = sum_{j<=K} (-1)^(1+j) C_j t^(j-1) e^t + sum_{j>K} (-1)^(1+j) C_j t^(j-K-1),
    // so the coefficient of t^n is
    //   r_n = sum_{j<=K, j-1<=n} (-1)^(1+j) C_j / (n-j+1)!  +  [n<=M-K-1] (-1)^(K+n) C_{K+n+1}.
    // The first M-1 of these must vanish identically and the leading one has
    // a closed form; both are verified exactly, which pins the cofactor
    // computation to the analytic structure of the density.
    constexpr int kExtraTerms = 48;
    const int lead = m - 1;
    std::vector<BigRat> coeff(static_cast<std::size_t>(lead + kExtraTerms + 1));
    for (int n = 0; n <= lead + kExtraTerms; ++n) {
        BigRat r = 0;
        for (int j = 1; j <= k && j - 1 <= n; ++j)
            r += BigRat(first_row_sign(j) * minors[static_cast<std::size_t>(j - 1)],
                        big_factorial(n - j + 1));
        if (n <= m - k - 1)
            r += BigRat(first_row_sign(k + n + 1) * minors[static_cast<std::size_t>(k + n)]);
        coeff[static_cast<std::size_t>(n)] = r;
    }
    for (int n = 0; n < lead; ++n)
        if (coeff[static_cast<std::size_t>(n)] != 0)
            throw Error("make_pdf_context: cofactor/series inconsistency at order " +
                        std::to_string(n));

    const int parity = ((static_cast<long>(k) * (m - k) + m - 1) % 2 == 0) ? 1 : -1;
    {
        BigInt prods = 1;
        for (int i = 1; i <= k - 1; ++i)
            prods *= big_factorial(i);
        for (int i = 1; i <= m - k - 1; ++i)
            prods *= big_factorial(i);
        const BigRat expected = BigRat(parity * prods, big_factorial(m - 1));
        if (coeff[static_cast<std::size_t>(lead)] != expected)
            throw Error("make_pdf_context: leading series coefficient mismatch");
    }

    const BigRat r_lead = coeff[static_cast<std::size_t>(lead)] * parity;  // positive
    ctx.series_log_lead = log_big_rat_mag(r_lead);
    ctx.series_coeffs.resize(static_cast<std::size_t>(kExtraTerms + 1));
    for (int l = 0; l <= kExtraTerms; ++l) {
        const BigRat rho = coeff[static_cast<std::size_t>(lead + l)] / coeff[static_cast<std::size_t>(lead)];
        ctx.series_coeffs[static_cast<std::size_t>(l)] = rho.convert_to<double>();
    }

    const double pi = std::numbers::pi;
    double log_fact_products = 0.0;
    for (int i = 1; i <= k - 1; ++i)
        log_fact_products += log_factorial(i);
    for (int i = 1; i <= m - k - 1; ++i)
        log_fact_products += log_factorial(i);

    ctx.log_prefactor_const = log_factorial(m - 1) - k * std::log(pi * (be + params.n0)) -
                              (m - k) * std::log(pi * params.n0) - log_fact_products;

    // High-SNR limit: only the j = K cofactor survives; the combined sign
    // (-1)^(K + M + K*M - K^2) * sign(C_K) must be positive for the limit
    // density to be positive.
    const SignedLogReal& ck = ctx.cofactors[static_cast<std::size_t>(k - 1)];
    if (ck.is_zero())
        throw Error("make_pdf_context: vanishing C_K cofactor");
    const long hs_exp = static_cast<long>(k) + m + static_cast<long>(k) * m -
                        static_cast<long>(k) * k;
    const int hs_sign = (hs_exp % 2 == 0 ? 1 : -1) * ck.sign;
    if (hs_sign != 1)
        throw Error("make_pdf_context: high-SNR sign bookkeeping failed");
    ctx.high_snr_log_const =
        log_factorial(m - 1) + ck.log_mag - log_fact_products - m * std::log(pi);

    return ctx;
}

}  // namespace rsembed
