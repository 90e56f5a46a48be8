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

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rsembed_cli/experiment.hpp"

namespace {

int default_workers_from_env() {
    if (const char* env = std::getenv("RSEMBED_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w > 0)
                return w;
        } catch (...) {
        }
    }
    return 0;  // resolve to hardware concurrency later
}

}  // namespace

int main(int argc, char** argv) {
    using namespace rsembed;
    using namespace rsembed::cli;

    CLI::App app{"rsembed - reconfigurable-surface orthogonalization and "
                 "information-embedding experiments"};
    app.require_subcommand(1);

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "run an SNR/M sweep and write a CSV");
    std::string config_path;
    ExperimentConfig flag_cfg;
    bool has_k = false, has_m = false, has_beta = false, has_snr = false, has_samples = false,
         has_seed = false, has_es = false, has_out = false, has_workers = false;
    std::string beta_mode_str;
    sweep->add_option("--config", config_path, "JSON config file (flags override it)");
    sweep->add_option("--k", flag_cfg.k, "number of users")->each([&](const std::string&) { has_k = true; });
    sweep->add_option("--m", flag_cfg.m_list, "BS antenna counts (list)")
        ->expected(-1)
        ->each([&](const std::string&) { has_m = true; });
    sweep->add_option("--beta-mode", beta_mode_str, "channel gain mode: unit | array_gain")
        ->check(CLI::IsMember({"unit", "array_gain"}))
        ->each([&](const std::string&) { has_beta = true; });
    sweep->add_option("--snr", flag_cfg.snr_db_grid, "SNR grid in dB (strictly increasing)")
        ->expected(-1)
        ->each([&](const std::string&) { has_snr = true; });
    sweep->add_option("--samples", flag_cfg.num_samples, "Monte-Carlo samples per grid point")
        ->each([&](const std::string&) { has_samples = true; });
    sweep->add_option("--seed", flag_cfg.seed, "base RNG seed")
        ->each([&](const std::string&) { has_seed = true; });
    sweep->add_option("--es", flag_cfg.es, "per-user symbol energy Es")
        ->each([&](const std::string&) { has_es = true; });
    sweep->add_option("--out", flag_cfg.output_path, "output CSV path")
        ->each([&](const std::string&) { has_out = true; });
    sweep->add_option("--workers", flag_cfg.workers, "worker threads (default: RSEMBED_WORKERS or hardware)")
        ->each([&](const std::string&) { has_workers = true; });

    // ---- validate ----
    auto* validate = app.add_subcommand("validate", "run the self-validation suite");
    std::string level_str = "quick";
    int validate_workers = default_workers_from_env();
    validate->add_option("--level", level_str, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}));
    validate->add_option("--workers", validate_workers, "worker threads");

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "solve one surface configuration and print JSON");
    std::string kind_str;
    int sm = 3, sk = 2, sn = 8;
    std::uint64_t sseed = 1;
    double sbeta = 1.0;
    solve->add_option("--kind", kind_str, "aris | fris")
        ->required()
        ->check(CLI::IsMember({"aris", "fris"}));
    solve->add_option("--m", sm, "BS antennas");
    solve->add_option("--k", sk, "users");
    solve->add_option("--n", sn, "surface elements");
    solve->add_option("--seed", sseed, "RNG seed");
    solve->add_option("--beta", sbeta, "channel gain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // bad flags are invalid input
    }

    if (sweep->parsed()) {
        ExperimentConfig cfg;
        if (!config_path.empty()) {
            try {
                cfg = load_config_json(config_path);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
        if (!has_workers)
            flag_cfg.workers = default_workers_from_env();
        if (has_k) cfg.k = flag_cfg.k;
        if (has_m) cfg.m_list = flag_cfg.m_list;
        if (has_beta) cfg.beta_mode = beta_mode_str == "unit" ? BetaMode::Unit : BetaMode::ArrayGain;
        if (has_snr) cfg.snr_db_grid = flag_cfg.snr_db_grid;
        if (has_samples) cfg.num_samples = flag_cfg.num_samples;
        if (has_seed) cfg.seed = flag_cfg.seed;
        if (has_es) cfg.es = flag_cfg.es;
        if (has_out) cfg.output_path = flag_cfg.output_path;
        if (has_workers)
            cfg.workers = flag_cfg.workers;
        else if (cfg.workers <= 0)
            cfg.workers = default_workers_from_env();
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        return run_sweep_to_file(cfg, std::cerr);
    }

    if (validate->parsed()) {
        const ValidateLevel level = level_str == "full" ? ValidateLevel::Full : ValidateLevel::Quick;
        const auto results = run_validate(level, validate_workers, std::cout);
        for (const auto& r : results)
            if (!r.pass)
                return 1;
        return 0;
    }

    if (solve->parsed()) {
        const RsKind kind = kind_str == "aris" ? RsKind::Aris : RsKind::Fris;
        return run_solve(SystemDims{sm, sk, sn}, kind, sseed, sbeta, std::cout);
    }

    return 2;
}
