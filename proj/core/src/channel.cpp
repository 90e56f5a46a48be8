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

#include "rsembed/channel.hpp"

#include <cmath>
#include <string>

#include "rsembed/exceptions.hpp"
#include "rsembed/sampling.hpp"

namespace rsembed {

void SystemDims::validate() const {
    if (!(m > k && k >= 1))
        throw InvalidDims("SystemDims: need M > K >= 1 (got M=" + std::to_string(m) +
                          ", K=" + std::to_string(k) + ")");
    if (n < 1)
        throw InvalidDims("SystemDims: need N >= 1");
}

SystemDims ChannelTriple::dims() const {
    return SystemDims{static_cast<int>(h0.rows()), static_cast<int>(h0.cols()),
                      static_cast<int>(h1.cols())};
}

ChannelTriple generate_channels(const SystemDims& dims, RngStream& rng) {
    dims.validate();
    ChannelTriple ch;
    ch.h0 = complex_gaussian(dims.m, dims.k, rng);
    ch.h1 = complex_gaussian(dims.m, dims.n, rng);
    ch.h2 = complex_gaussian(dims.n, dims.k, rng);
    return ch;
}

ComplexMatrix effective_channel(const ChannelTriple& ch, const ComplexMatrix& theta) {
    if (theta.rows() != ch.h1.cols() || theta.cols() != ch.h2.rows())
        throw DimensionMismatch("effective_channel: theta must be N x N");
    if (ch.h1.rows() != ch.h0.rows() || ch.h2.cols() != ch.h0.cols())
        throw DimensionMismatch("effective_channel: channel triple is inconsistent");
    return ch.h0 + ch.h1 * theta * ch.h2;
}

ComplexMatrix embed_semi_unitary(const ComplexMatrix& u, int k) {
    if (u.rows() != u.cols())
        throw DimensionMismatch("embed_semi_unitary: u must be square");
    if (k < 1 || k > u.cols())
        throw InvalidDims("embed_semi_unitary: need 1 <= k <= M");
    return u.leftCols(k);
}

ComplexVector sample_received_vector(const TargetChannel& target, const SignalParams& params,
                                     RngStream& rng) {
    const Eigen::Index m = target.u_tilde.rows();
    const Eigen::Index k = target.u_tilde.cols();
    if (std::abs(target.beta - params.beta) > 1e-12 * std::max(1.0, std::abs(params.beta)))
        throw DimensionMismatch("sample_received_vector: target.beta and params.beta disagree");
    ComplexVector s(k);
    for (Eigen::Index i = 0; i < k; ++i)
        s(i) = std::sqrt(params.es) * rng.complex_normal();
    ComplexVector noise(m);
    for (Eigen::Index i = 0; i < m; ++i)
        noise(i) = std::sqrt(params.n0) * rng.complex_normal();
    return std::sqrt(target.beta) * (target.u_tilde * s) + noise;
}

TargetChannel sample_haar_target(int m, int k, double beta, RngStream& rng) {
    return TargetChannel{beta, embed_semi_unitary(sample_haar_unitary(m, rng), k)};
}

}  // namespace rsembed
