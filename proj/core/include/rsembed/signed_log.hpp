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

#include <cmath>
#include <span>
#include <vector>

namespace rsembed {

/// A real number stored as sign * exp(log_mag).
///
/// This is the currency of all determinant/factorial arithmetic: values like
/// t^(K-1) * e^t with t in the thousands are far outside double range but are
/// perfectly tame in the log domain. Exact zero is a distinguished state
/// (sign == 0) rather than log_mag == -inf, so sums never propagate NaN.
struct SignedLogReal {
    int sign = 0;          // -1, 0 or +1
    double log_mag = 0.0;  // natural log of |value|; ignored when sign == 0

    static SignedLogReal zero() { return {0, 0.0}; }

    static SignedLogReal from_real(double x) {
        if (x == 0.0)
            return zero();
        return {x > 0.0 ? 1 : -1, std::log(std::abs(x))};
    }

    double to_real() const { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }

    bool is_zero() const { return sign == 0; }

    SignedLogReal negated() const { return {-sign, log_mag}; }

    friend SignedLogReal operator*(const SignedLogReal& a, const SignedLogReal& b) {
        if (a.sign == 0 || b.sign == 0)
            return zero();
        return {a.sign * b.sign, a.log_mag + b.log_mag};
    }
};

/// Signed log-sum-exp: the exact sum of the terms, in signed-log form.
///
/// Factors out the largest log-magnitude so that no intermediate overflows;
/// returns exact zero when all terms are zero or the accumulation cancels
/// exactly at working precision. terms must be non-empty.
SignedLogReal signed_log_sum(std::span<const SignedLogReal> terms);

inline SignedLogReal signed_log_sum(const std::vector<SignedLogReal>& terms) {
    return signed_log_sum(std::span<const SignedLogReal>(terms));
}

/// ln(n!) for n >= 0. Table-backed (compensated cumulative sums) up to n=2047,
/// lgamma beyond; relative error <= 1e-12 well past n = 500.
double log_factorial(int n);

}  // namespace rsembed
