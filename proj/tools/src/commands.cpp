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

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "rsembed/exceptions.hpp"
#include "rsembed/pdf.hpp"
#include "rsembed/rates.hpp"
#include "rsembed/sampling.hpp"
#include "rsembed/solver.hpp"
#include "rsembed_cli/experiment.hpp"

namespace rsembed::cli {

namespace {

std::string fmt(const char* format, ...) {
    char buf[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

struct CheckRunner {
    std::vector<CheckResult> results;
    std::ostream& out;

    void run(const std::string& name, const std::function<CheckResult()>& body) {
        CheckResult r;
        try {
            r = body();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.name = name;
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        for (std::size_t i = r.name.size(); i < 28; ++i)
            out << ' ';
        out << r.detail << "\n";
        results.push_back(r);
    }
};

CheckResult check_haar_unitarity() {
    RngStream rng(101, 0);
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const ComplexMatrix u = sample_haar_unitary(4, rng);
        worst = std::max(worst,
                         (u.adjoint() * u - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff());
    }
    return {"", worst <= 1e-12, fmt("max |U^H U - I| = %.2e (tol 1e-12)", worst)};
}

CheckResult check_haar_moment() {
    RngStream rng(102, 0);
    const int n = 20000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = std::norm(sample_haar_unitary(4, rng)(0, 0));
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum_sq / n - mean * mean) / (n - 1));
    const double dev = std::abs(mean - 0.25);
    return {"", dev <= 3 * se, fmt("|E|U11|^2 - 1/4| = %.2e (3se = %.2e)", dev, 3 * se)};
}

CheckResult check_solver(RsKind kind) {
    const SystemDims dims = kind == RsKind::Aris ? SystemDims{3, 2, 8} : SystemDims{4, 2, 8};
    double worst_res = 0.0, worst_orth = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        RngStream rng(200 + rep, 0);
        const ChannelTriple ch = generate_channels(dims, rng);
        const double beta = rep % 2 == 0 ? 1.0 : static_cast<double>(dims.m);
        const TargetChannel target = sample_haar_target(dims.m, dims.k, beta, rng);
        const RsConfiguration cfg =
            kind == RsKind::Aris ? solve_aris(ch, target) : solve_fris(ch, target);
        worst_res = std::max(worst_res, verify_orthogonalization(ch, cfg, target));
        const ComplexMatrix h = effective_channel(ch, cfg.as_theta());
        const double orth =
            (h.adjoint() * h - beta * ComplexMatrix::Identity(dims.k, dims.k)).cwiseAbs().maxCoeff();
        worst_orth = std::max(worst_orth, orth);
    }
    return {"", worst_res <= 1e-8 && worst_orth <= 1e-7,
            fmt("max residual = %.2e (tol 1e-8), max |H^H H - beta I| = %.2e (tol 1e-7)",
                worst_res, worst_orth)};
}

CheckResult check_pdf_point() {
    const PdfContext ctx = make_pdf_context({1.0, 1.0, 1.0}, 2, 1);
    const double p = std::exp(log_pdf(2.0, ctx));
    const double expect =
        std::exp(-2.0) * (std::numbers::e - 1.0) / (2.0 * std::numbers::pi * std::numbers::pi);
    const double rel = std::abs(p / expect - 1.0);
    return {"", rel <= 1e-10, fmt("closed-form point rel err = %.2e (tol 1e-10)", rel)};
}

CheckResult check_normalization(bool full) {
    struct Case {
        int m, k;
        double snr, beta, tol;
    };
    std::vector<Case> cases = {{2, 1, 1.0, 1.0, 1e-8}, {4, 2, 10.0, 1.0, 1e-6}};
    if (full)
        for (int mk = 0; mk < 5; ++mk) {
            static const int dims[5][2] = {{2, 1}, {3, 1}, {3, 2}, {4, 2}, {6, 4}};
            for (double snr : {0.1, 1.0, 10.0, 100.0})
                for (int b = 0; b < 2; ++b)
                    cases.push_back({dims[mk][0], dims[mk][1], snr,
                                     b == 0 ? 1.0 : static_cast<double>(dims[mk][0]), 1e-6});
        }
    double worst = 0.0;
    bool ok = true;
    for (const auto& c : cases) {
        const PdfContext ctx = make_pdf_context({1.0, 1.0 / c.snr, c.beta}, c.m, c.k);
        const double dev = std::abs(radial_normalization(ctx) - 1.0);
        worst = std::max(worst, dev);
        ok = ok && dev <= c.tol;
    }
    return {"", ok, fmt("max |integral - 1| = %.2e over %zu cases", worst, cases.size())};
}

CheckResult check_oracle_triangle(int m, int k, long samples, int workers) {
    const SignalParams params{1.0, 0.25, 1.0};
    const PdfContext ctx = make_pdf_context(params, m, k);
    RngStream point_rng(300 + m * 10 + k, 0);
    double worst_z = 0.0;
    for (int rep = 0; rep < 4; ++rep) {
        const TargetChannel target{params.beta, sample_isotropic_columns(m, k, point_rng)};
        const ComplexVector y = sample_received_vector(target, params, point_rng);
        const double closed = std::exp(log_pdf(y.squaredNorm(), ctx));
        const auto est = mc_oracle_pdf(y, ctx, samples, RngStream(400 + rep, m), workers);
        worst_z = std::max(worst_z, std::abs(closed - est.mean) / est.std_error);
    }
    return {"", worst_z <= 3.0, fmt("max |closed - MC| = %.2f se (tol 3)", worst_z)};
}

CheckResult check_hciz_convergence() {
    const PdfContext ctx = make_pdf_context({1.0, 0.25, 1.0}, 3, 2);
    RngStream rng(310, 0);
    double worst_ratio = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < 2; ++rep) {
        const TargetChannel target{1.0, sample_isotropic_columns(3, 2, rng)};
        const ComplexVector y = sample_received_vector(target, ctx.signal(), rng);
        const double ynsq = y.squaredNorm();
        const double p = std::exp(log_pdf(ynsq, ctx));
        const double e1 = std::abs(hciz_perturbed_oracle(ynsq, ctx, 1e-2) / p - 1.0);
        const double e2 = std::abs(hciz_perturbed_oracle(ynsq, ctx, 1e-3) / p - 1.0);
        const double e3 = std::abs(hciz_perturbed_oracle(ynsq, ctx, 1e-4) / p - 1.0);
        worst_ratio = std::min({worst_ratio, e1 / e2, e2 / e3});
    }
    return {"", worst_ratio >= 5.0, fmt("min error ratio per 10x eps = %.1f (tol 5)", worst_ratio)};
}

CheckResult check_zero_rate_boundary(int workers) {
    const auto [rs, se] = rs_rate_unitary({1.0, 0.5, 1.0}, 2, 20000, RngStream(320, 0), workers);
    return {"", std::abs(rs) <= 3 * se,
            fmt("K=M rate = %.2e bits (3se = %.2e)", rs, 3 * se)};
}

CheckResult check_chain_rule(int workers) {
    const SignalParams params{1.0, 0.1, 1.0};
    const PdfContext ctx = make_pdf_context(params, 5, 4);
    const RateBreakdown bd = rate_breakdown(ctx, 10000, RngStream(330, 0), workers);
    const bool exact = bd.total_rate_bits == bd.ue_rate_bits + bd.rs_rate_bits;
    const bool nonneg = bd.rs_rate_bits >= -3 * bd.rs_rate_std_error;
    return {"", exact && nonneg,
            fmt("total-ue-rs = %.1e, rs = %.3f +- %.3f bits",
                bd.total_rate_bits - bd.ue_rate_bits - bd.rs_rate_bits, bd.rs_rate_bits,
                bd.rs_rate_std_error)};
}

CheckResult check_slope_fit(int workers) {
    std::vector<std::pair<double, RateBreakdown>> pts;
    for (double snr : {30.0, 35.0, 40.0}) {
        const SignalParams params{1.0, std::pow(10.0, -snr / 10.0), 1.0};
        const PdfContext ctx = make_pdf_context(params, 4, 2);
        pts.emplace_back(snr,
                         rate_breakdown(ctx, 200000, RngStream(340, static_cast<std::uint64_t>(snr)),
                                        workers));
    }
    const MuxGainFit fit = mux_gain_estimate(pts);
    const double rs_err = std::abs(fit.rs_slope - 2.0) / 2.0;
    const double total_err = std::abs(fit.total_slope - 4.0) / 4.0;
    return {"", rs_err <= 0.1 && total_err <= 0.1,
            fmt("rs slope = %.3f (want 2 +-10%%), total slope = %.3f (want 4 +-10%%)",
                fit.rs_slope, fit.total_slope)};
}

}  // namespace

std::vector<CheckResult> run_validate(ValidateLevel level, int workers, std::ostream& out) {
    const bool full = level == ValidateLevel::Full;
    CheckRunner runner{{}, out};

    runner.run("haar_unitarity", check_haar_unitarity);
    runner.run("haar_moment", check_haar_moment);
    runner.run("solver_aris", [] { return check_solver(RsKind::Aris); });
    runner.run("solver_fris", [] { return check_solver(RsKind::Fris); });
    runner.run("pdf_closed_form_point", check_pdf_point);
    runner.run("pdf_normalization", [&] { return check_normalization(full); });
    runner.run("oracle_triangle_m2k1", [&] { return check_oracle_triangle(2, 1, 100000, workers); });
    runner.run("oracle_triangle_m3k2", [&] { return check_oracle_triangle(3, 2, 100000, workers); });
    if (full)
        runner.run("oracle_triangle_m4k2",
                   [&] { return check_oracle_triangle(4, 2, 200000, workers); });
    runner.run("hciz_convergence", check_hciz_convergence);
    runner.run("zero_rate_k_eq_m", [&] { return check_zero_rate_boundary(workers); });
    runner.run("chain_rule", [&] { return check_chain_rule(workers); });
    if (full)
        runner.run("mux_gain_slopes", [&] { return check_slope_fit(workers); });

    int failed = 0;
    for (const auto& r : runner.results)
        failed += r.pass ? 0 : 1;
    out << (failed == 0 ? "overall: PASS" : "overall: FAIL") << " ("
        << runner.results.size() - failed << "/" << runner.results.size() << " checks)\n";
    return runner.results;
}

int run_solve(const SystemDims& dims, RsKind kind, std::uint64_t seed, double beta,
              std::ostream& out) {
    nlohmann::json j;
    j["kind"] = kind == RsKind::Aris ? "aris" : "fris";
    j["m"] = dims.m;
    j["k"] = dims.k;
    j["n"] = dims.n;
    j["beta"] = beta;
    j["seed"] = seed;
    try {
        RngStream rng(seed, 0);
        const ChannelTriple ch = generate_channels(dims, rng);
        const TargetChannel target = sample_haar_target(dims.m, dims.k, beta, rng);
        const RsConfiguration cfg =
            kind == RsKind::Aris ? solve_aris(ch, target) : solve_fris(ch, target);
        j["residual"] = verify_orthogonalization(ch, cfg, target);
        if (kind == RsKind::Aris)
            j["alpha_norm"] = cfg.aris_alpha.norm();
        else
            j["theta_fro_norm"] = cfg.fris_theta.norm();
        out << j.dump(2) << "\n";
        return 0;
    } catch (const InfeasibleDims& e) {
        j["error"] = "InfeasibleDims";
        j["message"] = e.what();
        out << j.dump(2) << "\n";
        return 2;
    } catch (const InvalidDims& e) {
        j["error"] = "InvalidDims";
        j["message"] = e.what();
        out << j.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        j["error"] = "RuntimeFailure";
        j["message"] = e.what();
        out << j.dump(2) << "\n";
        return 1;
    }
}

}  // namespace rsembed::cli
