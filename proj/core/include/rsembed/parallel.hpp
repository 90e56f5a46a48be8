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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "rsembed/rng.hpp"

namespace rsembed {

/// workers > 0 is taken literally; workers <= 0 means hardware concurrency.
inline int resolve_workers(int workers) {
    if (workers > 0)
        return workers;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Monte-Carlo work is split into fixed-size chunks; chunk c draws from
/// base.substream(c) and partial accumulators combine in chunk order. A run
/// is therefore bit-reproducible for a given seed at any worker count.
inline constexpr long kMcChunk = 8192;

template <class Acc, class ChunkFn>
Acc chunked_mc_reduce(long total_samples, const RngStream& base, int workers, ChunkFn&& fn) {
    const long nchunks = total_samples > 0 ? (total_samples + kMcChunk - 1) / kMcChunk : 0;
    std::vector<Acc> partial(static_cast<std::size_t>(nchunks));

    auto run_chunk = [&](long c) {
        RngStream rng = base.substream(static_cast<std::uint64_t>(c));
        const long begin = c * kMcChunk;
        const long count = std::min(kMcChunk, total_samples - begin);
        fn(rng, count, partial[static_cast<std::size_t>(c)]);
    };

    const int nthreads = static_cast<int>(std::min<long>(resolve_workers(workers), std::max<long>(nchunks, 1)));
    if (nthreads <= 1) {
        for (long c = 0; c < nchunks; ++c)
            run_chunk(c);
    } else {
        std::atomic<long> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int w = 0; w < nthreads; ++w)
            pool.emplace_back([&] {
                for (long c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1))
                    run_chunk(c);
            });
        for (auto& th : pool)
            th.join();
    }

    Acc out{};
    for (const auto& p : partial)
        out += p;
    return out;
}

/// Streaming first/second moments of a scalar sample.
struct MomentAccumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    long count = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++count;
    }

    MomentAccumulator& operator+=(const MomentAccumulator& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
        count += o.count;
        return *this;
    }

    double mean() const { return sum / static_cast<double>(count); }

    double sample_variance() const {
        if (count < 2)
            return 0.0;
        const double n = static_cast<double>(count);
        return std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
    }

    double std_error() const {
        return count > 0 ? std::sqrt(sample_variance() / static_cast<double>(count)) : 0.0;
    }
};

}  // namespace rsembed
