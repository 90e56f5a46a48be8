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

#include <Eigen/SVD>
#include <cmath>

#include "rsembed/exceptions.hpp"
#include "rsembed/sampling.hpp"
#include "rsembed/solver.hpp"

using namespace rsembed;

TEST_CASE("build_h12 - small hand cases and the vectorization identity")
{
    // M=1, K=1, N=2: h1 = [a b], h2 = [c; d] -> [[a c, b d]]
    {
        ChannelTriple ch;
        const Complex a(1.0, 2.0), b(0.5, -1.0), c(2.0, 0.0), d(-1.0, 1.0);
        ch.h0 = ComplexMatrix::Zero(1, 1);
        ch.h1 = ComplexMatrix(1, 2);
        ch.h1 << a, b;
        ch.h2 = ComplexMatrix(2, 1);
        ch.h2 << c, d;
        const ComplexMatrix h12 = build_h12(ch);
        REQUIRE(h12.rows() == 1);
        REQUIRE(h12.cols() == 2);
        CHECK(std::abs(h12(0, 0) - a * c) <= 1e-15);
        CHECK(std::abs(h12(0, 1) - b * d) <= 1e-15);
    }

    // M=2, K=1, N=1: h1 = [1; 2], h2 = [3] -> column [3; 6]
    {
        ChannelTriple ch;
        ch.h0 = ComplexMatrix::Zero(2, 1);
        ch.h1 = ComplexMatrix(2, 1);
        ch.h1 << Complex(1.0), Complex(2.0);
        ch.h2 = ComplexMatrix(1, 1);
        ch.h2 << Complex(3.0);
        const ComplexMatrix h12 = build_h12(ch);
        CHECK(std::abs(h12(0, 0) - Complex(3.0)) <= 1e-15);
        CHECK(std::abs(h12(1, 0) - Complex(6.0)) <= 1e-15);
    }

    // vec(h1 diag(alpha) h2) = h12 * alpha
    {
        RngStream rng(33, 0);
        ChannelTriple ch;
        ch.h0 = complex_gaussian(2, 2, rng);
        ch.h1 = complex_gaussian(2, 9, rng);
        ch.h2 = complex_gaussian(9, 2, rng);
        ComplexVector alpha(9);
        for (int i = 0; i < 9; ++i)
            alpha(i) = rng.complex_normal();
        const ComplexMatrix prod = ch.h1 * ComplexMatrix(alpha.asDiagonal()) * ch.h2;
        const ComplexVector lhs = Eigen::Map<const ComplexVector>(prod.data(), prod.size());
        const ComplexVector rhs = build_h12(ch) * alpha;
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12 * rhs.norm());
    }
}

TEST_CASE("solve_aris - minimum-norm solutions and feasibility")
{
    // scalar case: [1 1] alpha = 1 has minimum-norm solution [0.5, 0.5]
    {
        ChannelTriple ch;
        ch.h0 = ComplexMatrix::Zero(1, 1);
        ch.h1 = ComplexMatrix(1, 2);
        ch.h1 << Complex(1.0), Complex(1.0);
        ch.h2 = ComplexMatrix(2, 1);
        ch.h2 << Complex(1.0), Complex(1.0);
        const TargetChannel target{1.0, ComplexMatrix::Identity(1, 1)};
        const RsConfiguration cfg = solve_aris(ch, target);
        REQUIRE(cfg.kind == RsKind::Aris);
        CHECK(std::abs(cfg.aris_alpha(0) - Complex(0.5)) <= 1e-12);
        CHECK(std::abs(cfg.aris_alpha(1) - Complex(0.5)) <= 1e-12);
        CHECK(verify_orthogonalization(ch, cfg, target) <= 1e-12);
    }

    RngStream rng(44, 0);

    // already-orthogonal direct channel: alpha = 0 is the minimum-norm fit
    {
        const SystemDims dims{2, 1, 4};
        ChannelTriple ch = generate_channels(dims, rng);
        const TargetChannel target{1.0, embed_semi_unitary(sample_haar_unitary(2, rng), 1)};
        ch.h0 = std::sqrt(target.beta) * target.u_tilde;
        const RsConfiguration cfg = solve_aris(ch, target);
        CHECK(cfg.aris_alpha.norm() <= 1e-10);
    }

    // random feasible instance
    {
        const SystemDims dims{3, 2, 8};
        const ChannelTriple ch = generate_channels(dims, rng);
        const TargetChannel target = sample_haar_target(3, 2, 1.0, rng);
        const RsConfiguration cfg = solve_aris(ch, target);
        CHECK(verify_orthogonalization(ch, cfg, target) <= 1e-8);
    }

    // N = M*K is not enough (strict excess required)
    {
        const SystemDims dims{3, 2, 6};
        const ChannelTriple ch = generate_channels(dims, rng);
        const TargetChannel target = sample_haar_target(3, 2, 1.0, rng);
        CHECK_THROWS_AS(solve_aris(ch, target), InfeasibleDims);
    }

    // rank-deficient coupling matrix
    {
        const SystemDims dims{2, 1, 4};
        ChannelTriple ch = generate_channels(dims, rng);
        ch.h1.row(0).setZero();  // kills a row of h12
        const TargetChannel target = sample_haar_target(2, 1, 1.0, rng);
        CHECK_THROWS_AS(solve_aris(ch, target), RankDeficient);
    }
}

TEST_CASE("solve_aris - no exact solution has smaller norm")
{
    RngStream rng(55, 0);
    const SystemDims dims{3, 2, 8};
    const ChannelTriple ch = generate_channels(dims, rng);
    const TargetChannel target = sample_haar_target(3, 2, 2.0, rng);
    const RsConfiguration cfg = solve_aris(ch, target);
    CHECK(verify_orthogonalization(ch, cfg, target) <= 1e-8);

    // null-space perturbations keep the residual and can only grow the norm
    const ComplexMatrix h12 = build_h12(ch);
    Eigen::JacobiSVD<ComplexMatrix> svd(h12, Eigen::ComputeFullV);
    const ComplexMatrix null_basis = svd.matrixV().rightCols(8 - 6);
    for (int rep = 0; rep < 10; ++rep) {
        ComplexVector z(null_basis.cols());
        for (Eigen::Index i = 0; i < z.size(); ++i)
            z(i) = rng.complex_normal();
        RsConfiguration alt = cfg;
        alt.aris_alpha = cfg.aris_alpha + null_basis * z;
        CHECK(verify_orthogonalization(ch, alt, target) <= 1e-8);
        CHECK(cfg.aris_alpha.norm() <= alt.aris_alpha.norm() + 1e-12);
    }
}

TEST_CASE("solve_fris - closed cases and feasibility")
{
    RngStream rng(66, 0);

    // identity pseudo-inverses: theta = sqrt(beta) u_tilde
    {
        ChannelTriple ch;
        ch.h0 = ComplexMatrix::Zero(2, 2);
        ch.h1 = ComplexMatrix::Identity(2, 2);
        ch.h2 = ComplexMatrix::Identity(2, 2);
        const ComplexMatrix u = sample_haar_unitary(2, rng);
        const TargetChannel target{4.0, u};
        const RsConfiguration cfg = solve_fris(ch, target);
        REQUIRE(cfg.kind == RsKind::Fris);
        CHECK((cfg.fris_theta - 2.0 * u).cwiseAbs().maxCoeff() <= 1e-12);
    }

    // direct channel already equal to the target: theta = 0
    {
        const SystemDims dims{3, 2, 6};
        ChannelTriple ch = generate_channels(dims, rng);
        const TargetChannel target = sample_haar_target(3, 2, 1.0, rng);
        ch.h0 = std::sqrt(target.beta) * target.u_tilde;
        const RsConfiguration cfg = solve_fris(ch, target);
        CHECK(cfg.fris_theta.norm() <= 1e-10);
    }

    // random feasible instance with array gain
    {
        const SystemDims dims{4, 2, 8};
        const ChannelTriple ch = generate_channels(dims, rng);
        const TargetChannel target = sample_haar_target(4, 2, 4.0, rng);
        const RsConfiguration cfg = solve_fris(ch, target);
        CHECK(verify_orthogonalization(ch, cfg, target) <= 1e-8);
    }

    // N below max(M, K): no right inverse of h1 exists
    {
        const SystemDims dims{4, 2, 3};
        const ChannelTriple ch = generate_channels(dims, rng);
        const TargetChannel target = sample_haar_target(4, 2, 1.0, rng);
        CHECK_THROWS_AS(solve_fris(ch, target), InfeasibleDims);
    }
}

TEST_CASE("solve_aris / solve_fris - agreement and orthogonality preservation")
{
    RngStream rng(77, 0);

    // both solvers feasible on the same instance: residuals both vanish
    for (const SystemDims dims : {SystemDims{2, 1, 4}, SystemDims{3, 2, 8}}) {
        const ChannelTriple ch = generate_channels(dims, rng);
        const TargetChannel target = sample_haar_target(dims.m, dims.k, 2.0, rng);
        CHECK(verify_orthogonalization(ch, solve_aris(ch, target), target) <= 1e-8);
        CHECK(verify_orthogonalization(ch, solve_fris(ch, target), target) <= 1e-8);
    }

    // realized channels are orthogonal with gain beta
    for (int rep = 0; rep < 5; ++rep) {
        const SystemDims dims{4, 2, 12};
        const ChannelTriple ch = generate_channels(dims, rng);
        const double beta = rep % 2 == 0 ? 1.0 : 4.0;
        const TargetChannel target = sample_haar_target(4, 2, beta, rng);
        for (const auto& cfg : {solve_aris(ch, target), solve_fris(ch, target)}) {
            const ComplexMatrix h = effective_channel(ch, cfg.as_theta());
            CHECK((h.adjoint() * h - beta * ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <=
                  1e-7);
        }
    }
}

TEST_CASE("verify_orthogonalization - residual normalization")
{
    RngStream rng(88, 0);
    const SystemDims dims{2, 1, 4};
    ChannelTriple ch = generate_channels(dims, rng);
    ch.h0.setZero();
    const TargetChannel target = sample_haar_target(2, 1, 3.0, rng);
    RsConfiguration zero_cfg;
    zero_cfg.kind = RsKind::Aris;
    zero_cfg.aris_alpha = ComplexVector::Zero(4);
    // zero surface and zero direct channel: residual is exactly 1
    CHECK_THAT(verify_orthogonalization(ch, zero_cfg, target),
               Catch::Matchers::WithinAbs(1.0, 1e-14));
}
