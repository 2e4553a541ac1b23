/*
   Copyright 2026 The obda Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// obda: command-line front end.
//
//   obda run          --config <path> [--seed N] [--out DIR] [--threads T]
//   obda verify-perr  --config <path> ...
//   obda sweep-bounds --config <path> ...
//   obda emit-plots   --out DIR
//
// Exit codes: 0 success, 2 config error, 3 vacuous bound, 4 verification
// failure, 1 anything else.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "obda/error.hpp"
#include "obda/harness.hpp"

namespace {

struct Common {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    int threads = 0;
};

void add_common(CLI::App* cmd, Common& c, bool needs_config) {
    auto* opt = cmd->add_option("--config", c.config, "JSON run configuration");
    if (needs_config) opt->required()->check(CLI::ExistingFile);
    cmd->add_option("--seed", c.seed, "master seed (overrides the config)");
    cmd->add_option("--out", c.out, "output directory (overrides the config)");
    cmd->add_option("--threads", c.threads, "worker threads; 0 keeps the OpenMP default")->check(CLI::NonNegativeNumber);
}

obda::RunConfig load(const Common& c) {
    obda::RunConfig cfg = c.config.empty() ? obda::parse_config("{}") : obda::load_config(c.config);
    if (c.seed) cfg.seed = *c.seed;
    if (!c.out.empty()) cfg.output_dir = c.out;
    return cfg;
}

int exit_code(obda::ErrorKind kind) {
    switch (kind) {
    case obda::ErrorKind::config:
    case obda::ErrorKind::invalid_input:
    case obda::ErrorKind::domain:
    case obda::ErrorKind::io: return 2;
    case obda::ErrorKind::vacuous_bound:
    case obda::ErrorKind::degenerate: return 3;
    default: return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-bit over-the-air aggregation simulator"};
    app.require_subcommand(1);

    Common run_opts, verify_opts, sweep_opts, plot_opts;
    auto* run = app.add_subcommand("run", "train with one-bit over-the-air signSGD");
    add_common(run, run_opts, true);
    auto* verify = app.add_subcommand("verify-perr", "Monte Carlo check of the bit-error bounds");
    add_common(verify, verify_opts, true);
    auto* sweep = app.add_subcommand("sweep-bounds", "tabulate convergence bounds over a grid");
    add_common(sweep, sweep_opts, true);
    auto* plots = app.add_subcommand("emit-plots", "write gnuplot scripts for a results directory");
    add_common(plots, plot_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) {
            obda::set_threads(run_opts.threads);
            const auto cfg = load(run_opts);
            obda::run_command(cfg);
            std::cout << "wrote results to " << cfg.output_dir.string() << '\n';
            return 0;
        }
        if (verify->parsed()) {
            obda::set_threads(verify_opts.threads);
            const auto cfg = load(verify_opts);
            const auto rows = obda::verify_perr(cfg);
            const auto path = cfg.output_dir / "verify_perr.csv";
            obda::write_verify_csv(path, rows);
            std::size_t failed = 0;
            for (const auto& r : rows) failed += !r.pass;
            std::cout << rows.size() - failed << "/" << rows.size() << " points within bound; wrote "
                      << path.string() << '\n';
            return failed == 0 ? 0 : 4;
        }
        if (sweep->parsed()) {
            obda::set_threads(sweep_opts.threads);
            const auto cfg = load(sweep_opts);
            obda::LandscapeConstants constants;
            if (cfg.sweep.constants) constants = *cfg.sweep.constants;
            else constants = obda::landscape_constants(cfg, obda::build_problem(cfg));
            const auto rows = obda::sweep_bounds(cfg, constants);
            const auto path = cfg.output_dir / "sweep_bounds.csv";
            obda::write_sweep_csv(path, rows);
            std::size_t vacuous = 0;
            for (const auto& r : rows) vacuous += r.vacuous;
            std::cout << rows.size() << " points (" << vacuous << " vacuous); wrote " << path.string() << '\n';
            return 0;
        }
        const auto cfg = load(plot_opts);
        for (const auto& p : obda::emit_plots(cfg.output_dir)) std::cout << p.string() << '\n';
        return 0;
    } catch (const obda::Error& e) {
        std::cerr << "error (" << obda::to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
