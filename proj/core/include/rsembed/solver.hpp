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

#include "rsembed/channel.hpp"
#include "rsembed/types.hpp"

namespace rsembed {

enum class RsKind { Aris, Fris };

/// A solved surface configuration. ARIS carries the per-element reflection
/// coefficients alpha (theta = diag(alpha)); FRIS carries a full N x N
/// reflection matrix. Exactly one payload is populated.
struct RsConfiguration {
    RsKind kind = RsKind::Aris;
    ComplexVector aris_alpha;  // N, when kind == Aris
    ComplexMatrix fris_theta;  // N x N, when kind == Fris

    /// Expands the configuration to the N x N reflection matrix.
    ComplexMatrix as_theta() const;
};

struct SolverOptions {
    /// Relative rank threshold: singular values <= rank_rtol * sigma_max are
    /// treated as zero. Negative selects the default max(rows, cols) * eps.
    double rank_rtol = -1.0;
};

/// MK x N matrix whose i-th column is vec(h1_i * h2_i^T), h1_i the i-th
/// column of h1 and h2_i^T the i-th row of h2 (vec stacks columns). For a
/// diagonal reflection matrix, vec(h1 * diag(alpha) * h2) equals this matrix
/// times alpha.
ComplexMatrix build_h12(const ChannelTriple& ch);

/// ARIS reflection coefficients realizing sqrt(beta) * u_tilde: the
/// minimum-norm solution alpha of build_h12(ch) * alpha = vec(target - h0).
/// Requires N > M*K and full row rank.
RsConfiguration solve_aris(const ChannelTriple& ch, const TargetChannel& target,
                           const SolverOptions& opts = {});

/// FRIS reflection matrix pinv(h1) * (sqrt(beta) * u_tilde - h0) * pinv(h2).
/// Requires N >= max(M, K) with full-rank h1 (rows) and h2 (columns) so that
/// the right/left pseudo-inverses exist.
RsConfiguration solve_fris(const ChannelTriple& ch, const TargetChannel& target,
                           const SolverOptions& opts = {});

/// Relative Frobenius residual of the realized effective channel:
/// ||effective - sqrt(beta) u_tilde||_F / (sqrt(beta) ||u_tilde||_F).
double verify_orthogonalization(const ChannelTriple& ch, const RsConfiguration& cfg,
                                const TargetChannel& target);

}  // namespace rsembed
