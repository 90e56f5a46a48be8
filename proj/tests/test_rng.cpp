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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "rsembed/rng.hpp"

using namespace rsembed;

TEST_CASE("RngStream - identical keys replay identical sequences")
{
    RngStream a(12345, 6);
    RngStream b(12345, 6);
    for (int i = 0; i < 1000; ++i)
        REQUIRE(a.next_u64() == b.next_u64());

    // copying preserves position
    RngStream c(9, 0);
    c.next_u64();
    RngStream d = c;
    for (int i = 0; i < 100; ++i)
        REQUIRE(c.next_u64() == d.next_u64());
}

TEST_CASE("RngStream - frozen first outputs (determinism regression)")
{
    // Self-golden values of this generator, recorded when the implementation
    // was frozen; any change to the counter layout or round count trips this.
    const std::uint64_t expected[4] = {
        0xe50a0ebce3e80670ull,
        0xb615aa2795f222c0ull,
        0xdfc5ccbeac08141bull,
        0xa7f6609379c07a47ull,
    };
    RngStream r(1, 0);
    for (std::uint64_t e : expected)
        CHECK(r.next_u64() == e);
    RngStream r2(1, 1);
    CHECK(r2.next_u64() == 0x428264b607071c12ull);
}

TEST_CASE("RngStream - distinct streams and substreams differ")
{
    RngStream a(77, 0);
    RngStream b(77, 1);
    int same = 0;
    for (int i = 0; i < 64; ++i)
        same += a.next_u64() == b.next_u64() ? 1 : 0;
    CHECK(same == 0);

    RngStream base(77, 3);
    std::set<std::uint64_t> ids;
    for (std::uint64_t c = 0; c < 1000; ++c)
        ids.insert(base.substream(c).stream_id());
    CHECK(ids.size() == 1000);

    // substream derivation does not consume from the parent
    RngStream p(5, 0);
    const std::uint64_t before = RngStream(5, 0).next_u64();
    (void)p.substream(0);
    CHECK(p.next_u64() == before);
}

TEST_CASE("RngStream - uniform and normal moments")
{
    const int n = 100000;
    RngStream rng(31337, 0);
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sum_sq += u * u;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(std::abs(mean - 0.5) <= 3.0 * std::sqrt(1.0 / 12.0 / n));
    CHECK(std::abs(var - 1.0 / 12.0) <= 3.0 * std::sqrt(2.0 / n) / 12.0 * 3.0);

    double nsum = 0.0, nsum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        nsum += z;
        nsum_sq += z * z;
    }
    const double nmean = nsum / n;
    const double nvar = nsum_sq / n - nmean * nmean;
    CHECK(std::abs(nmean) <= 3.0 / std::sqrt(n));
    CHECK(std::abs(nvar - 1.0) <= 3.0 * std::sqrt(2.0 / n));

    // complex normal: E|z|^2 = 1, |z|^2 ~ Exp(1)
    double csum = 0.0;
    for (int i = 0; i < n; ++i)
        csum += std::norm(rng.complex_normal());
    CHECK(std::abs(csum / n - 1.0) <= 3.0 / std::sqrt(n));
}

TEST_CASE("RngStream - lag-1 autocorrelation is negligible")
{
    const int n = 100000;
    RngStream rng(404, 2);
    double prev = rng.uniform();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        acc += (prev - 0.5) * (u - 0.5);
        prev = u;
    }
    // correlation of uniforms has sd ~ 1/(12 sqrt(n))
    CHECK(std::abs(acc / n) <= 3.0 / (12.0 * std::sqrt(n)));
}
