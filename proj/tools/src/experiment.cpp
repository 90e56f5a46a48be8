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

#include "rsembed_cli/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rsembed/parallel.hpp"
#include "rsembed/pdf.hpp"
#include "rsembed/rates.hpp"

#ifndef RSEMBED_BUILD_ID
#define RSEMBED_BUILD_ID "unknown"
#endif

namespace rsembed::cli {

void ExperimentConfig::validate() const {
    if (k < 1)
        throw std::invalid_argument("config: k must be >= 1");
    if (m_list.empty())
        throw std::invalid_argument("config: m_list must be non-empty");
    for (int m : m_list)
        if (m <= k)
            throw std::invalid_argument("config: every m must satisfy m > k (got m=" +
                                        std::to_string(m) + ", k=" + std::to_string(k) + ")");
    if (snr_db_grid.empty())
        throw std::invalid_argument("config: snr_db_grid must be non-empty");
    for (std::size_t i = 1; i < snr_db_grid.size(); ++i)
        if (!(snr_db_grid[i] > snr_db_grid[i - 1]))
            throw std::invalid_argument("config: snr_db_grid must be strictly increasing");
    if (num_samples < 100)
        throw std::invalid_argument("config: num_samples must be >= 100");
    if (!(es > 0.0))
        throw std::invalid_argument("config: es must be > 0");
    if (output_path.empty())
        throw std::invalid_argument("config: output_path must be non-empty");
}

ExperimentConfig load_config_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config: JSON parse error in '" + path + "': " + e.what());
    }

    ExperimentConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "k")
            cfg.k = value.get<int>();
        else if (key == "m_list")
            cfg.m_list = value.get<std::vector<int>>();
        else if (key == "beta_mode") {
            const std::string s = value.get<std::string>();
            if (s == "unit")
                cfg.beta_mode = BetaMode::Unit;
            else if (s == "array_gain")
                cfg.beta_mode = BetaMode::ArrayGain;
            else
                throw std::invalid_argument("config: beta_mode must be 'unit' or 'array_gain'");
        } else if (key == "snr_db_grid")
            cfg.snr_db_grid = value.get<std::vector<double>>();
        else if (key == "num_samples")
            cfg.num_samples = value.get<long>();
        else if (key == "seed")
            cfg.seed = value.get<std::uint64_t>();
        else if (key == "es")
            cfg.es = value.get<double>();
        else if (key == "output_path")
            cfg.output_path = value.get<std::string>();
        else if (key == "workers")
            cfg.workers = value.get<int>();
        else
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    return cfg;
}

const char* beta_mode_name(BetaMode mode) {
    return mode == BetaMode::Unit ? "unit" : "array_gain";
}

std::string build_id() { return RSEMBED_BUILD_ID; }

namespace {

// Shortest representation that round-trips a double exactly.
std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void run_sweep(const ExperimentConfig& cfg, std::ostream& out) {
    cfg.validate();
    const int workers = resolve_workers(cfg.workers);
    const RngStream root(cfg.seed, 0);

    out << "# rsembed sweep seed=" << cfg.seed << " samples=" << cfg.num_samples
        << " k=" << cfg.k << " es=" << g17(cfg.es) << " beta_mode=" << beta_mode_name(cfg.beta_mode)
        << " workers=" << workers << " build=" << build_id() << "\n";
    out << "# rate columns in bits (log base 2); snr_db = 10*log10(Es/N0), beta applied separately\n";
    out << "snr_db,m,k,beta,ue_rate_bits,rs_rate_bits,total_rate_bits,rs_rate_std_err,"
           "num_samples,seed\n";

    const std::size_t snr_count = cfg.snr_db_grid.size();
    for (std::size_t mi = 0; mi < cfg.m_list.size(); ++mi) {
        const int m = cfg.m_list[mi];
        const double beta = cfg.beta_mode == BetaMode::Unit ? 1.0 : static_cast<double>(m);
        for (std::size_t si = 0; si < snr_count; ++si) {
            const double snr_db = cfg.snr_db_grid[si];
            const double n0 = cfg.es / std::pow(10.0, snr_db / 10.0);
            const SignalParams params{cfg.es, n0, beta};
            const PdfContext ctx = make_pdf_context(params, m, cfg.k);
            const std::uint64_t point = static_cast<std::uint64_t>(mi) * snr_count + si;
            const RateBreakdown bd =
                rate_breakdown(ctx, cfg.num_samples, root.substream(point), workers);
            out << g17(snr_db) << ',' << m << ',' << cfg.k << ',' << g17(beta) << ','
                << g17(bd.ue_rate_bits) << ',' << g17(bd.rs_rate_bits) << ','
                << g17(bd.total_rate_bits) << ',' << g17(bd.rs_rate_std_error) << ','
                << cfg.num_samples << ',' << cfg.seed << "\n";
        }
    }
}

int run_sweep_to_file(const ExperimentConfig& cfg, std::ostream& diag) {
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        diag << "error: " << e.what() << "\n";
        return 2;
    }
    std::ostringstream buffer;
    try {
        run_sweep(cfg, buffer);
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return 1;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        diag << "error: cannot open output file '" << cfg.output_path << "'\n";
        return 1;
    }
    out << buffer.str();
    if (!out) {
        diag << "error: write failure on '" << cfg.output_path << "'\n";
        return 1;
    }
    diag << "wrote " << cfg.output_path << " (" << cfg.m_list.size() * cfg.snr_db_grid.size()
         << " rows)\n";
    return 0;
}

}  // namespace rsembed::cli
