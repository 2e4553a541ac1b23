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

#include "obda/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>

#include <json.hpp>

#include "obda/aggregate.hpp"
#include "obda/error.hpp"

namespace obda {

namespace {

ChannelMode channel_mode(RunMode mode) {
    switch (mode) {
    case RunMode::fading_perfect_csi: return ChannelMode::fading_perfect_csi;
    case RunMode::fading_imperfect_csi: return ChannelMode::fading_imperfect_csi;
    default: return ChannelMode::awgn;
    }
}

BoundScenario bound_scenario(RunMode mode) {
    switch (mode) {
    case RunMode::noiseless: return BoundScenario::noiseless;
    case RunMode::awgn: return BoundScenario::awgn;
    case RunMode::fading_perfect_csi: return BoundScenario::fading;
    case RunMode::fading_imperfect_csi: return BoundScenario::imperfect;
    }
    return BoundScenario::noiseless;
}

CsiErrorModel csi_model(const RunConfig& cfg, double sigma_delta) {
    return CsiErrorModel{sigma_delta, cfg.csi_family, cfg.csi_real_only};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::io, "cannot write '" + path.string() + "'");
    return out;
}

} // namespace

// --- problem and run setup ---------------------------------------------------

Problem build_problem(const RunConfig& cfg) {
    Problem problem;
    const auto K = static_cast<std::size_t>(cfg.K);
    if (cfg.landscape == LandscapeKind::quadratic) {
        problem = make_quadratic_problem(cfg.q == 0 ? 20 : cfg.q, K, cfg.samples_per_device, cfg.seed);
    } else {
        const auto data = load_dataset(cfg.dataset_path.value().string());
        problem = make_logistic_problem(data, K, cfg.samples_per_device, cfg.seed, cfg.lambda);
        if (cfg.q != 0 && cfg.q != problem.landscape->dimension())
            fail(ErrorKind::config, "q = " + std::to_string(cfg.q) + " but the dataset gives q = " +
                                        std::to_string(problem.landscape->dimension()));
    }
    return problem;
}

PowerPolicy run_policy(const RunConfig& cfg, RunMode mode) {
    const ChannelMode ch = channel_mode(mode);
    return derive_policy(cfg.P0, cfg.M, ch == ChannelMode::awgn ? 0.0 : cfg.g_th, ch);
}

double run_sigma_z(const RunConfig& cfg, const PowerPolicy& policy, RunMode mode) {
    if (mode == RunMode::noiseless) return 0.0;
    return std::sqrt(policy.P0 / (static_cast<double>(policy.M) * db_to_linear(cfg.snr_db)));
}

RunResult run_feel(const RunConfig& cfg, const Problem& problem, RunMode mode, Exec exec) {
    const LossLandscape& landscape = *problem.landscape;
    const auto* logistic = dynamic_cast<const LogisticLandscape*>(&landscape);
    const std::size_t q = landscape.dimension();
    const std::size_t K = problem.devices.size();
    require(K >= 1, ErrorKind::config, "problem has no devices");
    const std::size_t D = problem.devices.front().size();
    for (const auto& d : problem.devices)
        require(d.size() == D, ErrorKind::config, "device datasets must have equal sizes");

    RunResult result;
    result.mode = mode;
    result.hyper = theorem_hyperparams(landscape.smoothness(), cfg.N, cfg.gamma, D);
    if (cfg.batch_size) {
        require(*cfg.batch_size <= D, ErrorKind::config, "batch_size exceeds the per-device dataset");
        result.hyper.n_b = *cfg.batch_size;
        result.hyper.clamped = false;
        result.hyper.eta = 1.0 / std::sqrt(l1_norm(landscape.smoothness()) * static_cast<double>(result.hyper.n_b));
    }
    if (cfg.eta) result.hyper.eta = *cfg.eta;
    result.policy = run_policy(cfg, mode);
    result.sigma_z = run_sigma_z(cfg, result.policy, mode);
    const CsiErrorModel csi = csi_model(cfg, mode == RunMode::fading_imperfect_csi ? cfg.sigma_delta : 0.0);
    if (mode == RunMode::fading_imperfect_csi) csi.validate(result.policy.g_th);

    std::vector<DeviceDataset> devices = problem.devices;
    for (auto& d : devices) d.batch_size = result.hyper.n_b;

    const std::size_t uses = channel_uses(q, cfg.modulation);
    const std::size_t n_sym = ofdm_symbols(uses, cfg.M);

    ModelState model{problem.w0, 0};
    std::vector<SignVector> signs(K);
    double l1_sum = 0.0;
    for (int n = 0; n < cfg.N; ++n) {
        const auto round = static_cast<std::uint32_t>(n);
        const GradientVector g = landscape.full_gradient(model.w);
        for_each_index(exec, K, [&](std::size_t k) {
            rng::Stream batch(cfg.seed, rng::Purpose::batch, round, static_cast<std::uint32_t>(k));
            signs[k] = sign_quantize(local_gradient(landscape, model, devices[k], batch));
        });

        SignVector v;
        double truncated = 0.0;
        if (mode == RunMode::noiseless) {
            std::vector<std::int8_t> vote(q);
            for (std::size_t i = 0; i < q; ++i) {
                int sum = 0;
                for (const auto& s : signs) sum += s[i];
                vote[i] = sign_of(sum);
            }
            v = SignVector(std::move(vote));
        } else {
            const TxFrame frame = build_tx_frame(signs, cfg.modulation);
            std::vector<AggregatedBlock> blocks;
            blocks.reserve(n_sym);
            for (std::size_t t = 0; t < n_sym; ++t) {
                const auto sym = static_cast<std::uint32_t>(t);
                const std::size_t width = symbol_width(uses, cfg.M, t);
                const auto channel = sample_channel(K, width, result.policy, csi, SymbolKey{cfg.seed, round, sym}, exec);
                rng::Stream noise(cfg.seed, rng::Purpose::noise, round, sym);
                blocks.push_back(air_superpose(frame, t * cfg.M, channel, result.policy, result.sigma_z, noise, exec));
                for (int c : blocks.back().contributing_counts) truncated += static_cast<double>(K) - c;
            }
            v = majority_vote(blocks, q, cfg.modulation);
        }

        const SignVector truth = sign_quantize(g);
        std::size_t wrong = 0;
        for (std::size_t i = 0; i < q; ++i) wrong += v[i] != truth[i];

        model = apply_update(model, v, result.hyper.eta);

        RoundRecord rec;
        rec.round = n + 1;
        rec.g_l1 = l1_norm(g);
        l1_sum += rec.g_l1;
        rec.g_l1_timeavg = l1_sum / rec.round;
        rec.accuracy = logistic ? logistic->accuracy(model.w, problem.test) : std::numeric_limits<double>::quiet_NaN();
        rec.ber_emp = static_cast<double>(wrong) / static_cast<double>(q);
        rec.trunc_frac = truncated / (static_cast<double>(K) * static_cast<double>(uses));
        result.rounds.push_back(rec);
    }
    result.final_accuracy = result.rounds.back().accuracy;
    result.final_model = std::move(model);
    return result;
}

RunResult run_feel(const RunConfig& cfg, Exec exec) {
    const Problem problem = build_problem(cfg);
    return run_feel(cfg, problem, cfg.mode, exec);
}

// --- Monte Carlo bit-error verification --------------------------------------

double perr_monte_carlo(RunMode scenario, int K, double S, double rho, double alpha, double sigma_delta,
                        const CsiErrorModel& csi_family, std::uint64_t trials, std::uint64_t seed,
                        std::uint32_t point, Exec exec) {
    require(scenario != RunMode::noiseless, ErrorKind::config, "no Monte Carlo model for noiseless");
    require(K >= 1 && S >= 0.0 && rho > 0.0 && trials >= 1, ErrorKind::config, "invalid verification point");
    const bool fading = scenario != RunMode::awgn;
    PowerPolicy policy;
    policy.rho0 = rho;
    policy.mode = channel_mode(scenario);
    if (fading) {
        require(alpha > 0.0 && alpha < 1.0, ErrorKind::config, "fading verification needs alpha in (0, 1)");
        policy.g_th = -std::log(alpha);
        policy.alpha = alpha;
    }
    CsiErrorModel csi = csi_family;
    csi.sigma_delta = scenario == RunMode::fading_imperfect_csi ? sigma_delta : 0.0;
    if (csi.sigma_delta > 0.0) csi.validate(policy.g_th);

    const double flip = 0.5 * std::erfc(S / std::sqrt(2.0));
    const double amp = std::sqrt(rho);
    constexpr std::size_t chunk = 4096;
    const auto errors = chunked_reduce<std::uint64_t>(exec, trials, chunk, [&](std::size_t begin, std::size_t end) {
        rng::Stream st(seed, rng::Purpose::verify, point, static_cast<std::uint32_t>(begin / chunk));
        std::uint64_t err = 0;
        for (std::size_t t = begin; t < end; ++t) {
            double y = st.normal();
            for (int k = 0; k < K; ++k) {
                const double s = st.uniform() < flip ? -1.0 : 1.0;
                if (!fading) {
                    y += amp * s;
                    continue;
                }
                const auto h = st.complex_normal();
                const auto h_hat = csi.sigma_delta > 0.0 ? h + csi.draw(st) : h;
                y += (h * inversion_coefficient(h_hat, policy)).real() * s;
            }
            err += y < 0.0;
        }
        return err;
    });
    return static_cast<double>(errors) / static_cast<double>(trials);
}

std::vector<VerifyRow> verify_perr(const RunConfig& cfg, Exec exec) {
    const VerifyGrid& grid = cfg.verify;
    std::vector<VerifyRow> rows;
    for (RunMode scenario : grid.scenarios) {
        const bool fading = scenario != RunMode::awgn;
        const bool imperfect = scenario == RunMode::fading_imperfect_csi;
        const std::vector<double> alphas = fading ? grid.alpha : std::vector<double>{1.0};
        const std::vector<double> deltas = imperfect ? grid.sigma_delta : std::vector<double>{0.0};
        for (int K : grid.K)
            for (double S : grid.S)
                for (double rho_db : grid.rho_db)
                    for (double alpha : alphas)
                        for (double sd : deltas) {
                            VerifyRow r;
                            r.scenario = scenario;
                            r.K = K;
                            r.S = S;
                            r.rho_db = rho_db;
                            r.alpha = alpha;
                            r.sigma_delta = sd;
                            r.trials = grid.trials;
                            rows.push_back(r);
                        }
    }

    for (std::size_t i = 0; i < rows.size(); ++i) {
        VerifyRow& r = rows[i];
        const double rho = db_to_linear(r.rho_db);
        const CsiErrorModel csi = csi_model(cfg, r.sigma_delta);
        double bound = 0.0;
        if (r.scenario == RunMode::awgn) {
            bound = perr_bound_awgn(r.K, r.S, rho);
        } else if (r.scenario == RunMode::fading_perfect_csi) {
            bound = perr_bound_fading(r.K, r.alpha, r.S, rho);
        } else {
            const ScenarioParams p{r.K, rho, r.alpha, r.sigma_delta, -std::log(r.alpha), csi.delta_max()};
            bound = perr_bound_imperfect(p, r.S);
        }
        r.p_emp = perr_monte_carlo(r.scenario, r.K, r.S, rho, r.alpha, r.sigma_delta, csi, r.trials, cfg.seed,
                                   static_cast<std::uint32_t>(i), exec);
        r.p_bound = clamp_probability(bound);
        r.margin = r.p_bound - r.p_emp;
        const double band = 3.0 * std::sqrt(r.p_bound * (1.0 - r.p_bound) / static_cast<double>(r.trials));
        r.pass = r.p_emp <= r.p_bound + band;
    }
    return rows;
}

// --- bound sweeps ------------------------------------------------------------

LandscapeConstants landscape_constants(const RunConfig& cfg, const Problem& problem) {
    const LossLandscape& landscape = *problem.landscape;
    LandscapeConstants c;
    c.L1 = l1_norm(landscape.smoothness());
    if (problem.sigma) {
        c.sigma1 = l1_norm(*problem.sigma);
    } else {
        DeviceDataset pooled{landscape.pool(), 1};
        rng::Stream stream(cfg.seed, rng::Purpose::landscape, 1);
        const auto profile = estimate_noise_profile(landscape, ModelState{problem.w0, 0}, pooled, 10000, stream);
        c.sigma1 = l1_norm(profile.sigma);
    }
    c.F0 = landscape.loss(problem.w0);
    c.Fstar = landscape.lower_bound();
    c.gamma = cfg.gamma;
    c.N = cfg.N;
    return c;
}

std::vector<SweepRow> sweep_bounds(const RunConfig& cfg, const LandscapeConstants& constants) {
    const SweepGrid& grid = cfg.sweep;
    std::vector<SweepRow> rows;
    for (BoundScenario which : grid.scenarios) {
        const bool fading = which == BoundScenario::fading || which == BoundScenario::imperfect;
        const std::vector<double> alphas = fading ? grid.alpha : std::vector<double>{1.0};
        const std::vector<double> deltas =
            which == BoundScenario::imperfect ? grid.sigma_delta : std::vector<double>{0.0};
        for (int K : grid.K)
            for (double rho_db : grid.rho_db)
                for (double alpha : alphas)
                    for (double sd : deltas) {
                        SweepRow r;
                        r.scenario = which;
                        r.K = K;
                        r.rho_db = rho_db;
                        r.alpha = alpha;
                        r.sigma_delta = sd;
                        const ScenarioParams p{K, db_to_linear(rho_db), alpha, sd, -std::log(alpha),
                                               csi_model(cfg, sd).delta_max()};
                        try {
                            r.denominator = scaling_denominator(p, which);
                            r.report = conv_bound(p, constants, which);
                        } catch (const VacuousBoundError&) {
                            const double nan = std::numeric_limits<double>::quiet_NaN();
                            r.vacuous = true;
                            r.report = BoundReport{which, nan, nan, nan};
                        } catch (const Error& e) {
                            if (e.kind() != ErrorKind::domain) throw;
                            fail(ErrorKind::config, "sweep point K=" + std::to_string(K) + " alpha=" + num(alpha) +
                                                        " sigma_delta=" + num(sd) + ": " + e.what());
                        }
                        rows.push_back(r);
                    }
    }
    return rows;
}

// --- serialization -----------------------------------------------------------

void write_rounds_csv(const std::filesystem::path& path, const std::vector<RoundRecord>& rounds) {
    auto out = open_out(path);
    out << "round,g_l1,g_l1_timeavg,accuracy,ber_emp,trunc_frac\n";
    for (const auto& r : rounds)
        out << r.round << ',' << num(r.g_l1) << ',' << num(r.g_l1_timeavg) << ',' << num(r.accuracy) << ','
            << num(r.ber_emp) << ',' << num(r.trunc_frac) << '\n';
}

void write_verify_csv(const std::filesystem::path& path, const std::vector<VerifyRow>& rows) {
    auto out = open_out(path);
    out << "scenario,K,S,rho_db,alpha,sigma_delta,trials,p_emp,p_bound,margin,pass\n";
    for (const auto& r : rows)
        out << to_string(r.scenario) << ',' << r.K << ',' << num(r.S) << ',' << num(r.rho_db) << ','
            << num(r.alpha) << ',' << num(r.sigma_delta) << ',' << r.trials << ',' << num(r.p_emp) << ','
            << num(r.p_bound) << ',' << num(r.margin) << ',' << (r.pass ? 1 : 0) << '\n';
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
    auto out = open_out(path);
    out << "scenario,K,rho_db,alpha,sigma_delta,a,b,rhs,denominator,vacuous\n";
    for (const auto& r : rows)
        out << to_string(r.scenario) << ',' << r.K << ',' << num(r.rho_db) << ',' << num(r.alpha) << ','
            << num(r.sigma_delta) << ',' << num(r.report.a) << ',' << num(r.report.b) << ',' << num(r.report.rhs)
            << ',' << num(r.denominator) << ',' << (r.vacuous ? 1 : 0) << '\n';
}

void write_population_csv(const std::filesystem::path& path, const std::vector<PopulationRow>& rows) {
    auto out = open_out(path);
    out << "K,mode,mean_accuracy,mean_g_l1_timeavg,repeats\n";
    for (const auto& r : rows)
        out << r.K << ',' << to_string(r.mode) << ',' << num(r.mean_accuracy) << ',' << num(r.mean_g_l1) << ','
            << r.repeats << '\n';
}

void run_command(const RunConfig& cfg, Exec exec) {
    const std::vector<RunMode> modes = cfg.modes.empty() ? std::vector<RunMode>{cfg.mode} : cfg.modes;
    const Problem problem = build_problem(cfg);
    std::optional<LandscapeConstants> constants;
    if (problem.sigma) constants = landscape_constants(cfg, problem);

    nlohmann::ordered_json summary;
    summary["seed"] = cfg.seed;
    summary["landscape"] = problem.landscape->name();
    summary["q"] = problem.landscape->dimension();
    summary["K"] = cfg.K;
    summary["N"] = cfg.N;
    summary["snr_db"] = cfg.snr_db;
    summary["modes"] = nlohmann::ordered_json::array();
    for (RunMode mode : modes) {
        const RunResult res = run_feel(cfg, problem, mode, exec);
        if (res.hyper.clamped)
            std::cerr << "warning: batch size ceil(N/gamma) exceeds D; clamped to n_b = " << res.hyper.n_b << '\n';
        write_rounds_csv(cfg.output_dir / ("rounds_" + to_string(mode) + ".csv"), res.rounds);

        nlohmann::ordered_json m;
        m["mode"] = to_string(mode);
        m["eta"] = res.hyper.eta;
        m["batch_size"] = res.hyper.n_b;
        m["batch_clamped"] = res.hyper.clamped;
        m["rho0"] = res.policy.rho0;
        m["alpha"] = res.policy.alpha;
        m["sigma_z"] = res.sigma_z;
        m["final_g_l1_timeavg"] = res.rounds.back().g_l1_timeavg;
        m["final_accuracy"] = res.final_accuracy;
        if (constants) {
            const double rho = mode == RunMode::noiseless ? 1.0 : res.policy.rho0 / (res.sigma_z * res.sigma_z);
            const ScenarioParams p{cfg.K, rho, res.policy.alpha,
                                   mode == RunMode::fading_imperfect_csi ? cfg.sigma_delta : 0.0, res.policy.g_th,
                                   csi_model(cfg, cfg.sigma_delta).delta_max()};
            try {
                m["bound_rhs"] = conv_bound(p, *constants, bound_scenario(mode)).rhs;
            } catch (const VacuousBoundError&) {
                m["bound_rhs"] = "vacuous";
            }
        }
        summary["modes"].push_back(m);
    }

    if (!cfg.population_K.empty()) {
        std::vector<PopulationRow> rows;
        for (int K : cfg.population_K) {
            std::vector<PopulationRow> at_K;
            for (RunMode mode : modes) at_K.push_back(PopulationRow{K, mode, 0.0, 0.0, cfg.repeats});
            for (int r = 0; r < cfg.repeats; ++r) {
                RunConfig sub = cfg;
                sub.K = K;
                sub.seed = cfg.seed + static_cast<std::uint64_t>(r);
                const Problem p = build_problem(sub);
                for (std::size_t j = 0; j < modes.size(); ++j) {
                    const RunResult res = run_feel(sub, p, modes[j], exec);
                    at_K[j].mean_accuracy += res.final_accuracy / cfg.repeats;
                    at_K[j].mean_g_l1 += res.rounds.back().g_l1_timeavg / cfg.repeats;
                }
            }
            rows.insert(rows.end(), at_K.begin(), at_K.end());
        }
        write_population_csv(cfg.output_dir / "accuracy_vs_K.csv", rows);
    }

    auto out = open_out(cfg.output_dir / "summary.json");
    out << summary.dump(2) << '\n';
}

// --- plot scripts ------------------------------------------------------------

std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) fail(ErrorKind::io, "results directory '" + dir.string() + "' does not exist");

    std::vector<std::string> round_files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (name.starts_with("rounds_") && name.ends_with(".csv")) round_files.push_back(name);
    }
    std::sort(round_files.begin(), round_files.end());
    const bool have_population = fs::exists(dir / "accuracy_vs_K.csv");
    const bool have_verify = fs::exists(dir / "verify_perr.csv");
    const bool have_sweep = fs::exists(dir / "sweep_bounds.csv");
    if (round_files.empty() && !have_population && !have_verify && !have_sweep)
        fail(ErrorKind::io, "no result CSVs in '" + dir.string() +
                                "'; expected any of rounds_<mode>.csv, accuracy_vs_K.csv, verify_perr.csv, "
                                "sweep_bounds.csv");

    std::vector<fs::path> written;
    auto script = [&](const std::string& name, const std::string& body) {
        auto out = open_out(dir / name);
        out << "set datafile separator ','\nset terminal pngcairo size 800,560\n" << body;
        written.push_back(dir / name);
    };
    auto mode_of = [](const std::string& file) { return file.substr(7, file.size() - 11); };

    if (!round_files.empty()) {
        std::string acc = "set output 'accuracy_rounds.png'\nset xlabel 'round'\nset ylabel 'test accuracy'\n"
                          "set key bottom right\nplot ";
        std::string l1 = "set output 'gradient_norm_rounds.png'\nset xlabel 'round'\nset ylabel "
                         "'time-averaged ||g||_1'\nset logscale y\nplot ";
        for (std::size_t i = 0; i < round_files.size(); ++i) {
            const std::string sep = i + 1 < round_files.size() ? ", \\\n     " : "\n";
            const std::string title = mode_of(round_files[i]);
            acc += "'" + round_files[i] + "' every ::1 using 1:4 with lines title '" + title + "'" + sep;
            l1 += "'" + round_files[i] + "' every ::1 using 1:3 with lines title '" + title + "'" + sep;
        }
        script("accuracy_rounds.gp", acc);
        script("gradient_norm_rounds.gp", l1);
    }
    if (have_population) {
        script("accuracy_vs_K.gp",
               "set output 'accuracy_vs_K.png'\nset xlabel 'devices K'\nset ylabel 'final test accuracy'\n"
               "set logscale x\nset key bottom right\n"
               "modes = 'noiseless awgn fading_perfect_csi fading_imperfect_csi'\n"
               "plot for [m in modes] 'accuracy_vs_K.csv' every ::1 "
               "using 1:(strcol(2) eq m ? $3 : NaN) with linespoints title m\n");
    }
    if (have_verify) {
        script("perr_overlay.gp",
               "set output 'perr_overlay.png'\nset xlabel 'bound (clamped)'\nset ylabel 'empirical error rate'\n"
               "set logscale xy\nset key top left\n"
               "scen = 'awgn fading_perfect_csi fading_imperfect_csi'\n"
               "plot for [s in scen] 'verify_perr.csv' every ::1 "
               "using 9:(strcol(1) eq s ? $8 : NaN) with points title s, x with lines title 'bound'\n");
    }
    if (have_sweep) {
        script("bounds_vs_K.gp",
               "set output 'bounds_vs_K.png'\nset multiplot layout 1,2\nset logscale x\nset xlabel 'devices K'\n"
               "scen = 'awgn fading imperfect'\n"
               "set ylabel 'scaling factor a'\n"
               "plot for [s in scen] 'sweep_bounds.csv' every ::1 "
               "using 2:(strcol(1) eq s && $3 == 10 ? $6 : NaN) with points title s\n"
               "set ylabel 'bias b'\n"
               "plot for [s in scen] 'sweep_bounds.csv' every ::1 "
               "using 2:(strcol(1) eq s && $3 == 10 ? $7 : NaN) with points title s\n"
               "unset multiplot\n");
    }
    return written;
}

} // namespace obda
