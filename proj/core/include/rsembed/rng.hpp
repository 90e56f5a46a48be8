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
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>

namespace rsembed {

/// Counter-based random stream (Philox4x32-10).
///
/// A stream is a value keyed by (seed, stream_id): the 64-bit seed is the
/// cipher key and the stream id occupies the upper half of the 128-bit
/// counter, so distinct stream ids under one seed walk disjoint counter
/// ranges and produce independent sequences. Copying a stream copies its
/// position; two streams constructed with the same (seed, stream_id) emit
/// identical sequences.
class RngStream {
  public:
    RngStream() : RngStream(0, 0) {}

    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_(stream_id) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

    /// Child stream derived by mixing `child` into the stream id. Used to
    /// hand out reproducible independent streams to Monte-Carlo chunks and
    /// sweep points without coordinating counters.
    RngStream substream(std::uint64_t child) const {
        return RngStream(seed_, splitmix64(splitmix64(stream_) ^ (child + 0x632BE59BD9B4E019ull)));
    }

    std::uint64_t next_u64() {
        if (buf_pos_ >= 2)
            refill();
        return buf_[buf_pos_++];
    }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Two independent N(0,1) variates (Box-Muller).
    std::pair<double, double> normal_pair() {
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double a = 2.0 * std::numbers::pi * uniform();
        return {r * std::cos(a), r * std::sin(a)};
    }

    /// One N(0,1) variate. Draws a full Box-Muller pair and discards half;
    /// the consumption count per call is fixed, which keeps replay exact.
    double normal() { return normal_pair().first; }

    /// Circularly-symmetric complex normal CN(0,1): real and imaginary parts
    /// are independent N(0, 1/2).
    std::complex<double> complex_normal() {
        const double r = std::sqrt(-std::log(uniform_pos()));
        const double a = 2.0 * std::numbers::pi * uniform();
        return {r * std::cos(a), r * std::sin(a)};
    }

  private:
    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    static void philox_round(std::uint32_t x[4], std::uint32_t k0, std::uint32_t k1) {
        const std::uint64_t p0 = 0xD2511F53ull * x[0];
        const std::uint64_t p1 = 0xCD9E8D57ull * x[2];
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        x[0] = hi1 ^ x[1] ^ k0;
        x[1] = lo1;
        x[2] = hi0 ^ x[3] ^ k1;
        x[3] = lo0;
    }

    void refill() {
        std::uint32_t x[4] = {
            static_cast<std::uint32_t>(block_),
            static_cast<std::uint32_t>(block_ >> 32),
            static_cast<std::uint32_t>(stream_),
            static_cast<std::uint32_t>(stream_ >> 32),
        };
        std::uint32_t k0 = static_cast<std::uint32_t>(seed_);
        std::uint32_t k1 = static_cast<std::uint32_t>(seed_ >> 32);
        for (int round = 0; round < 10; ++round) {
            philox_round(x, k0, k1);
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        buf_[0] = (static_cast<std::uint64_t>(x[1]) << 32) | x[0];
        buf_[1] = (static_cast<std::uint64_t>(x[3]) << 32) | x[2];
        buf_pos_ = 0;
        ++block_;
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;  // 128-bit counter = (stream_ << 64) | block_
    std::uint64_t buf_[2] = {0, 0};
    int buf_pos_ = 2;
};

}  // namespace rsembed
