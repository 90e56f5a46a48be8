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
//
// Test-side oracles, deliberately independent of the implementation routes
// they check: recursive Laplace expansion instead of Bareiss elimination,
// direct factorial products, plain double cofactor expansion for small
// complex determinants, and a two-sample Kolmogorov-Smirnov test.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace rsembed::test {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial_big(int n) {
    BigInt v = 1;
    for (int i = 2; i <= n; ++i)
        v *= i;
    return v;
}

inline double log_big_mag(const BigInt& v) {
    BigInt a = abs(v);
    const unsigned bits = msb(a);
    if (bits <= 52)
        return std::log(a.convert_to<double>());
    const unsigned shift = bits - 52;
    return std::log(BigInt(a >> shift).convert_to<double>()) +
           static_cast<double>(shift) * std::numbers::ln2;
}

// Recursive Laplace expansion along the first row; O(n!) but exact, and a
// different algorithm from the production Bareiss elimination.
template <typename Ring>
Ring laplace_det(const std::vector<std::vector<Ring>>& a) {
    const std::size_t n = a.size();
    if (n == 0)
        return Ring(1);
    if (n == 1)
        return a[0][0];
    Ring det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == Ring(0))
            continue;
        std::vector<std::vector<Ring>> minor(n - 1, std::vector<Ring>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor[r - 1][cc++] = a[r][c];
            }
        }
        const Ring term = a[0][j] * laplace_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// Entry of the constant (y-independent) block of Z: rows 2..M, written with
// itil = i - 1 in 1..M-1.
inline BigInt z_constant_entry(int itil, int j, int k) {
    if (j <= k) {
        if (itil < j)
            return 0;
        // falling factorial (itil-1)(itil-2)...(itil-j+1)
        BigInt v = 1;
        for (int f = itil - j + 1; f <= itil - 1; ++f)
            v *= f;
        return v;
    }
    return itil == j - k ? factorial_big(itil - 1) : BigInt(0);
}

// First-row minor of the constant block with column j (1-based) removed.
inline BigInt z_first_row_minor(int m, int k, int j) {
    std::vector<std::vector<BigInt>> sub;
    sub.reserve(static_cast<std::size_t>(m - 1));
    for (int itil = 1; itil <= m - 1; ++itil) {
        std::vector<BigInt> row;
        row.reserve(static_cast<std::size_t>(m - 1));
        for (int col = 1; col <= m; ++col)
            if (col != j)
                row.push_back(z_constant_entry(itil, col, k));
        sub.push_back(std::move(row));
    }
    return laplace_det(sub);
}

// det(Z(t)) for rational t, split as e^t * P + Q with exact rational P, Q
// (row one is linear in e^t, so multilinearity separates the two parts).
struct ZDetSplit {
    BigRat p;
    BigRat q;
};

inline ZDetSplit z_det_exact_split(int m, int k, const BigRat& t) {
    auto t_pow = [&](int p) {
        BigRat v = 1;
        for (int i = 0; i < p; ++i)
            v *= t;
        return v;
    };
    std::vector<std::vector<BigRat>> rows_e(static_cast<std::size_t>(m),
                                            std::vector<BigRat>(static_cast<std::size_t>(m), 0));
    std::vector<std::vector<BigRat>> rows_c = rows_e;
    for (int j = 1; j <= m; ++j) {
        if (j <= k)
            rows_e[0][static_cast<std::size_t>(j - 1)] = t_pow(j - 1);
        else
            rows_c[0][static_cast<std::size_t>(j - 1)] = t_pow(j - k - 1);
    }
    for (int i = 2; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            const BigRat v = BigRat(z_constant_entry(i - 1, j, k));
            rows_e[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
            rows_c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
        }
    return ZDetSplit{laplace_det(rows_e), laplace_det(rows_c)};
}

// Plain cofactor-expansion determinant in complex double arithmetic.
inline std::complex<double> cofactor_det(const std::vector<std::vector<std::complex<double>>>& a) {
    const std::size_t n = a.size();
    if (n == 1)
        return a[0][0];
    std::complex<double> det = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<std::complex<double>>> minor(n - 1,
                                                             std::vector<std::complex<double>>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor[r - 1][cc++] = a[r][c];
            }
        }
        const std::complex<double> term = a[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// Two-sample Kolmogorov-Smirnov test. Returns true when the samples are
// consistent at the given significance (only alpha = 0.01 is tabulated).
inline bool ks_two_sample_consistent(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const std::size_t n = a.size(), m = b.size();
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < n && j < m) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
    }
    const double c_alpha = 1.628;  // alpha = 0.01
    const double threshold = c_alpha * std::sqrt((static_cast<double>(n) + m) / (static_cast<double>(n) * m));
    return d <= threshold;
}

}  // namespace rsembed::test
