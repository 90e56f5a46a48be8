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

#include "rsembed/rng.hpp"
#include "rsembed/types.hpp"

namespace rsembed {

/// Uplink geometry: K single-antenna users, an M-antenna base station
/// (M > K), and a reconfigurable surface with N elements in between.
struct SystemDims {
    int m = 0;  // BS antennas
    int k = 0;  // users
    int n = 0;  // surface elements

    void validate() const;
};

/// The three fading blocks of the composite channel: direct BS-UE link h0
/// (M x K), BS-surface link h1 (M x N) and surface-UE link h2 (N x K).
struct ChannelTriple {
    ComplexMatrix h0;
    ComplexMatrix h1;
    ComplexMatrix h2;

    SystemDims dims() const;
};

/// Desired effective channel sqrt(beta) * u_tilde with semi-unitary u_tilde
/// (u_tilde^H u_tilde = I_K).
struct TargetChannel {
    double beta = 1.0;
    ComplexMatrix u_tilde;
};

/// Per-user symbol energy, noise variance and common channel gain.
struct SignalParams {
    double es = 1.0;
    double n0 = 1.0;
    double beta = 1.0;
};

/// Draws the three channel blocks with i.i.d. CN(0,1) entries (Rayleigh
/// fading, unit variance; any gain normalization is absorbed into beta).
/// Fill order is h0, h1, h2, each column-major, so a draw is reproducible
/// from the stream alone.
ChannelTriple generate_channels(const SystemDims& dims, RngStream& rng);

/// Composite channel h0 + h1 * theta * h2 for an N x N reflection matrix.
ComplexMatrix effective_channel(const ChannelTriple& ch, const ComplexMatrix& theta);

/// First k columns of a unitary matrix; the result is semi-unitary.
ComplexMatrix embed_semi_unitary(const ComplexMatrix& u, int k);

/// One received vector y = sqrt(beta) * u_tilde * s + n with
/// s ~ CN(0, Es I_K) and n ~ CN(0, N0 I_M). Draw order: s then n.
ComplexVector sample_received_vector(const TargetChannel& target, const SignalParams& params,
                                     RngStream& rng);

/// Convenience: Haar-sampled target channel (u_tilde = first k columns of a
/// Haar unitary).
TargetChannel sample_haar_target(int m, int k, double beta, RngStream& rng);

}  // namespace rsembed
