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

#include "rsembed/signed_log.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rsembed {

SignedLogReal signed_log_sum(std::span<const SignedLogReal> terms) {
    if (terms.empty())
        throw std::invalid_argument("signed_log_sum: empty term list");

    double max_log = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& t : terms) {
        if (t.sign == 0)
            continue;
        any = true;
        if (t.log_mag > max_log)
            max_log = t.log_mag;
    }
    if (!any)
        return SignedLogReal::zero();

    // Accumulate sign_i * exp(log_i - max); every addend is in [-1, 1].
    double acc = 0.0;
    for (const auto& t : terms) {
        if (t.sign == 0)
            continue;
        acc += t.sign * std::exp(t.log_mag - max_log);
    }
    if (acc == 0.0)
        return SignedLogReal::zero();
    return {acc > 0.0 ? 1 : -1, max_log + std::log(std::abs(acc))};
}

namespace {

constexpr int kTableSize = 2048;

// Cumulative sums accumulated in long double so the table entries are
// correctly rounded; log_factorial(n) - log_factorial(n-1) then recovers
// ln(n) to within one rounding of the larger entry.
const double* log_factorial_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kTableSize);
        long double acc = 0.0L;
        t[0] = 0.0;
        for (int n = 1; n < kTableSize; ++n) {
            acc += std::log(static_cast<long double>(n));
            t[n] = static_cast<double>(acc);
        }
        return t;
    }();
    return table.data();
}

}  // namespace

double log_factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("log_factorial: negative argument");
    if (n < kTableSize)
        return log_factorial_table()[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace rsembed
