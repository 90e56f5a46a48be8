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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rsembed/solver.hpp"

namespace rsembed::cli {

enum class BetaMode { Unit, ArrayGain };

/// One sweep specification: for every (m, snr_db) grid point a rate
/// breakdown is estimated with N0 = es / 10^(snr_db/10) and beta = 1 (Unit)
/// or beta = m (ArrayGain), and one CSV row is emitted.
struct ExperimentConfig {
    int k = 4;
    std::vector<int> m_list = {5, 8, 16};
    BetaMode beta_mode = BetaMode::Unit;
    std::vector<double> snr_db_grid = {0, 5, 10, 15, 20, 25, 30};
    long num_samples = 100000;
    std::uint64_t seed = 42;
    double es = 1.0;
    std::string output_path = "sweep.csv";
    int workers = 0;  // 0 = hardware concurrency (or RSEMBED_WORKERS)

    /// Throws std::invalid_argument on structural problems (m <= k,
    /// non-increasing SNR grid, ...).
    void validate() const;
};

/// Loads a JSON config file; unknown keys are rejected.
ExperimentConfig load_config_json(const std::string& path);

const char* beta_mode_name(BetaMode mode);

/// Build stamp embedded in CSV comments (git-describe style).
std::string build_id();

/// Runs the sweep and writes the CSV (comment lines, schema header, one row
/// per grid point in grid order) to `out`. Byte-identical for identical
/// (config, seed, worker count).
void run_sweep(const ExperimentConfig& cfg, std::ostream& out);

/// Same, writing to cfg.output_path. Returns a process exit code.
int run_sweep_to_file(const ExperimentConfig& cfg, std::ostream& diag);

enum class ValidateLevel { Quick, Full };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Self-validation suites: normalization quadrature, oracle agreement, Haar
/// moments, solver residuals, boundary rates, and (Full) multiplexing-gain
/// slope fits. Prints one line per check to `out`; returns the results.
std::vector<CheckResult> run_validate(ValidateLevel level, int workers, std::ostream& out);

/// Solver demo: generates a random instance, solves for the requested
/// surface kind and prints a JSON report. Returns a process exit code
/// (0 ok, 1 runtime failure, 2 infeasible/invalid input).
int run_solve(const SystemDims& dims, RsKind kind, std::uint64_t seed, double beta,
              std::ostream& out);

}  // namespace rsembed::cli
