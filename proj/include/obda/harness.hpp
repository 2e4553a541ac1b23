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

#pragma once

// Experiment configuration and the four harness operations behind the CLI:
// FEEL training runs, Monte Carlo bit-error verification, bound sweeps and
// plot-script generation.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "obda/analysis.hpp"
#include "obda/channel.hpp"
#include "obda/core.hpp"
#include "obda/learn.hpp"
#include "obda/parallel.hpp"

namespace obda {

/// Channel scenario of a training run; noiseless is error-free aggregation.
enum class RunMode { noiseless, awgn, fading_perfect_csi, fading_imperfect_csi };

std::string to_string(RunMode mode);
RunMode parse_run_mode(const std::string& name);

enum class LandscapeKind { quadratic, logistic };

struct VerifyGrid {
    std::vector<RunMode> scenarios{RunMode::awgn, RunMode::fading_perfect_csi, RunMode::fading_imperfect_csi};
    std::vector<int> K{1, 10, 100};
    std::vector<double> S{0.5, 1.0, 2.0, 5.0};
    std::vector<double> rho_db{0.0, 10.0, 20.0};
    std::vector<double> alpha{0.5, 0.9};
    std::vector<double> sigma_delta{0.0, 0.02, 0.05};
    std::uint64_t trials = 100000;
};

struct SweepGrid {
    std::vector<BoundScenario> scenarios{BoundScenario::noiseless, BoundScenario::awgn, BoundScenario::fading,
                                         BoundScenario::imperfect};
    std::vector<int> K{10, 20, 50, 100, 200, 500, 1000};
    std::vector<double> rho_db{0.0, 10.0, 20.0};
    std::vector<double> alpha{0.5, 0.9};
    std::vector<double> sigma_delta{0.0, 0.02, 0.05};
    // Landscape constants; taken from the configured landscape when unset.
    std::optional<LandscapeConstants> constants;
};

struct RunConfig {
    std::uint64_t seed = 1;
    int K = 100;
    std::size_t M = 1000;
    int N = 150;
    std::size_t q = 0; // 0: the landscape's dimension
    double snr_db = 10.0;
    RunMode mode = RunMode::awgn;
    std::vector<RunMode> modes; // modes for `run`; empty means {mode}
    double g_th = 0.1;
    double gamma = 1.0;
    double sigma_delta = 0.0;
    LandscapeKind landscape = LandscapeKind::quadratic;
    Modulation modulation = Modulation::bpsk;
    std::optional<std::filesystem::path> dataset_path;
    std::filesystem::path output_dir = "out";

    double P0 = 1.0;
    std::size_t samples_per_device = 200; // 0: split the training pool evenly
    CsiFamily csi_family = CsiFamily::uniform;
    bool csi_real_only = false;
    double lambda = 1e-3;
    std::optional<double> eta;             // overrides the default learning rate
    std::optional<std::size_t> batch_size; // overrides the default batch size
    std::vector<int> population_K;         // extra accuracy-vs-K sweep for `run`
    int repeats = 1;                       // seeds per point of that sweep

    VerifyGrid verify;
    SweepGrid sweep;
};

/// Parses a JSON document; unknown keys are a config error.  Relative
/// dataset paths are resolved against `base_dir`.
RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// rho = 10^(snr_db / 10).
double db_to_linear(double db) noexcept;

struct RoundRecord {
    int round = 0;
    double g_l1 = 0.0;         // ||grad F(w)|| at the start of the round
    double g_l1_timeavg = 0.0; // running mean of g_l1
    double accuracy = 0.0;     // held-out accuracy after the update; NaN for quadratic
    double ber_emp = 0.0;      // fraction of decoded signs disagreeing with sign(grad F)
    double trunc_frac = 0.0;   // fraction of (device, parameter) pairs cut off
};

struct RunResult {
    RunMode mode = RunMode::awgn;
    std::vector<RoundRecord> rounds;
    Hyperparams hyper;
    PowerPolicy policy;
    double sigma_z = 0.0;
    double final_accuracy = 0.0;
    ModelState final_model;
};

Problem build_problem(const RunConfig& cfg);

/// Receive-power policy and noise level of a run mode.  snr_db fixes
/// P0 / (M sigma_z^2), so every mode sees the same noise and the receive SNR
/// rho0 / sigma_z^2 of the fading modes is lower by 1/E1(g_th).  Zero noise for
/// noiseless.
PowerPolicy run_policy(const RunConfig& cfg, RunMode mode);
double run_sigma_z(const RunConfig& cfg, const PowerPolicy& policy, RunMode mode);

/// N rounds of one-bit over-the-air signSGD.  Batches come from stream
/// (seed, batch, round, k), channels from (seed, channel/csi, round, k,
/// symbol) and receiver noise from (seed, noise, round, symbol), so runs of
/// different modes on the same seed share their data and fading draws.
RunResult run_feel(const RunConfig& cfg, const Problem& problem, RunMode mode, Exec exec = Exec::parallel);
RunResult run_feel(const RunConfig& cfg, Exec exec = Exec::parallel);

struct VerifyRow {
    RunMode scenario = RunMode::awgn;
    int K = 1;
    double S = 1.0;
    double rho_db = 0.0;
    double alpha = 1.0;
    double sigma_delta = 0.0;
    std::uint64_t trials = 0;
    double p_emp = 0.0;
    double p_bound = 0.0; // clamped to 1/2
    double margin = 0.0;  // p_bound - p_emp
    bool pass = false;    // p_emp <= p_bound + 3 sqrt(p_bound (1 - p_bound) / trials)
};

/// One coordinate with true sign +1: each device reports -1 with probability
/// Q(S), the receiver sees sum_k Re(h_k p(h_hat_k)) s_k + z with z ~ N(0, 1)
/// and rho0 = rho, and an error is a negative decision statistic.
double perr_monte_carlo(RunMode scenario, int K, double S, double rho, double alpha, double sigma_delta,
                        const CsiErrorModel& csi, std::uint64_t trials, std::uint64_t seed,
                        std::uint32_t point, Exec exec = Exec::parallel);

std::vector<VerifyRow> verify_perr(const RunConfig& cfg, Exec exec = Exec::parallel);

struct SweepRow {
    BoundScenario scenario = BoundScenario::noiseless;
    int K = 1;
    double rho_db = 0.0;
    double alpha = 1.0;
    double sigma_delta = 0.0;
    double denominator = 1.0;
    BoundReport report;
    bool vacuous = false;
};

/// Landscape constants of the configured problem: analytic sigma for the
/// quadratic landscape, an estimated profile otherwise.
LandscapeConstants landscape_constants(const RunConfig& cfg, const Problem& problem);

/// Cartesian sweep.  Every scenario spans K x rho; fading adds alpha and
/// imperfect adds sigma_delta.  g_th = -ln(alpha).
std::vector<SweepRow> sweep_bounds(const RunConfig& cfg, const LandscapeConstants& constants);

// CSV writers; numbers use %.17g so files round-trip exactly.
void write_rounds_csv(const std::filesystem::path& path, const std::vector<RoundRecord>& rounds);
void write_verify_csv(const std::filesystem::path& path, const std::vector<VerifyRow>& rows);
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows);

struct PopulationRow {
    int K = 0;
    RunMode mode = RunMode::awgn;
    double mean_accuracy = 0.0;
    double mean_g_l1 = 0.0;
    int repeats = 0;
};
void write_population_csv(const std::filesystem::path& path, const std::vector<PopulationRow>& rows);

/// Runs every configured mode and writes rounds_<mode>.csv, plus
/// accuracy_vs_K.csv when population_K is set and summary.json.
void run_command(const RunConfig& cfg, Exec exec = Exec::parallel);

/// Writes gnuplot scripts for whichever result CSVs exist in `dir`; throws io
/// listing the expected files when none do.  Returns the scripts written.
std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& dir);

} // namespace obda
