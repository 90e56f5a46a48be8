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

#include "rsembed/solver.hpp"

#include <Eigen/SVD>
#include <limits>
#include <string>

#include "rsembed/exceptions.hpp"

namespace rsembed {

ComplexMatrix RsConfiguration::as_theta() const {
    if (kind == RsKind::Aris)
        return ComplexMatrix(aris_alpha.asDiagonal());
    return fris_theta;
}

namespace {

double rank_threshold(const ComplexMatrix& a, const SolverOptions& opts) {
    if (opts.rank_rtol >= 0.0)
        return opts.rank_rtol;
    return static_cast<double>(std::max(a.rows(), a.cols())) *
           std::numeric_limits<double>::epsilon();
}

// Thin SVD with a full-rank check; used for all pseudo-inverses. For a wide
// full-row-rank matrix the SVD pseudo-inverse is the right inverse (and the
// solve it produces is the minimum-norm one); for a tall full-column-rank
// matrix it is the left inverse.
struct CheckedSvd {
    Eigen::JacobiSVD<ComplexMatrix> svd;

    CheckedSvd(const ComplexMatrix& a, const SolverOptions& opts, const char* what)
        : svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV) {
        const auto& sv = svd.singularValues();
        const double smin = sv(sv.size() - 1);
        const double smax = sv(0);
        if (smax == 0.0 || smin <= rank_threshold(a, opts) * smax)
            throw RankDeficient(std::string(what) +
                                ": smallest singular value below rank tolerance");
    }

    ComplexMatrix solve(const ComplexMatrix& b) const {
        return svd.matrixV() * svd.singularValues().cwiseInverse().asDiagonal() *
               (svd.matrixU().adjoint() * b);
    }

    ComplexMatrix pinv() const {
        return svd.matrixV() * svd.singularValues().cwiseInverse().asDiagonal() *
               svd.matrixU().adjoint();
    }
};

ComplexMatrix target_delta(const ChannelTriple& ch, const TargetChannel& target) {
    if (target.u_tilde.rows() != ch.h0.rows() || target.u_tilde.cols() != ch.h0.cols())
        throw DimensionMismatch("target u_tilde does not match channel dimensions");
    return std::sqrt(target.beta) * target.u_tilde - ch.h0;
}

// Solver-side dimension check: shapes must agree and be non-empty, but
// M = K is allowed (square algebra test cases), unlike in the channel
// generator where the system model requires M > K.
SystemDims solver_dims(const ChannelTriple& ch) {
    const SystemDims d = ch.dims();
    if (d.m < 1 || d.k < 1 || d.n < 1)
        throw InvalidDims("solver: all of M, K, N must be >= 1");
    if (ch.h1.rows() != ch.h0.rows() || ch.h2.cols() != ch.h0.cols() ||
        ch.h1.cols() != ch.h2.rows())
        throw DimensionMismatch("solver: channel triple shapes are inconsistent");
    return d;
}

}  // namespace

ComplexMatrix build_h12(const ChannelTriple& ch) {
    const SystemDims d = solver_dims(ch);
    ComplexMatrix h12(static_cast<Eigen::Index>(d.m) * d.k, d.n);
    for (int i = 0; i < d.n; ++i) {
        const ComplexMatrix outer = ch.h1.col(i) * ch.h2.row(i);  // M x K
        h12.col(i) = Eigen::Map<const ComplexVector>(outer.data(), outer.size());
    }
    return h12;
}

RsConfiguration solve_aris(const ChannelTriple& ch, const TargetChannel& target,
                           const SolverOptions& opts) {
    const SystemDims d = solver_dims(ch);
    if (d.n <= d.m * d.k)
        throw InfeasibleDims("ARIS requires N > M*K (got N=" + std::to_string(d.n) +
                             ", M*K=" + std::to_string(d.m * d.k) + ")");
    const ComplexMatrix h12 = build_h12(ch);
    CheckedSvd svd(h12, opts, "solve_aris");
    const ComplexMatrix delta = target_delta(ch, target);
    const ComplexVector b = Eigen::Map<const ComplexVector>(delta.data(), delta.size());
    RsConfiguration cfg;
    cfg.kind = RsKind::Aris;
    cfg.aris_alpha = svd.solve(b);
    return cfg;
}

RsConfiguration solve_fris(const ChannelTriple& ch, const TargetChannel& target,
                           const SolverOptions& opts) {
    const SystemDims d = solver_dims(ch);
    // Right pseudo-inverse of M x N h1 needs rank M (N >= M); left
    // pseudo-inverse of N x K h2 needs rank K (N >= K).
    if (d.n < d.m || d.n < d.k)
        throw InfeasibleDims("FRIS requires N >= max(M, K) (got N=" + std::to_string(d.n) +
                             ", M=" + std::to_string(d.m) + ", K=" + std::to_string(d.k) + ")");
    CheckedSvd svd1(ch.h1, opts, "solve_fris(h1)");
    CheckedSvd svd2(ch.h2, opts, "solve_fris(h2)");
    RsConfiguration cfg;
    cfg.kind = RsKind::Fris;
    cfg.fris_theta = svd1.pinv() * target_delta(ch, target) * svd2.pinv();
    return cfg;
}

double verify_orthogonalization(const ChannelTriple& ch, const RsConfiguration& cfg,
                                const TargetChannel& target) {
    const ComplexMatrix h = effective_channel(ch, cfg.as_theta());
    const double scale = std::sqrt(target.beta) * target.u_tilde.norm();
    return (h - std::sqrt(target.beta) * target.u_tilde).norm() / scale;
}

}  // namespace rsembed
