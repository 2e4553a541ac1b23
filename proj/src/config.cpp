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

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "obda/error.hpp"
#include "obda/harness.hpp"

namespace obda {

using nlohmann::json;

std::string to_string(RunMode mode) {
    switch (mode) {
    case RunMode::noiseless: return "noiseless";
    case RunMode::awgn: return "awgn";
    case RunMode::fading_perfect_csi: return "fading_perfect_csi";
    case RunMode::fading_imperfect_csi: return "fading_imperfect_csi";
    }
    return "?";
}

RunMode parse_run_mode(const std::string& name) {
    if (name == "noiseless") return RunMode::noiseless;
    if (name == "awgn") return RunMode::awgn;
    if (name == "fading_perfect_csi") return RunMode::fading_perfect_csi;
    if (name == "fading_imperfect_csi") return RunMode::fading_imperfect_csi;
    fail(ErrorKind::config, "unknown mode '" + name + "'");
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
    for (const auto& [key, _] : obj.items())
        if (!known.contains(key)) fail(ErrorKind::config, "unknown key '" + key + "' in " + where);
}

template <class T>
T get(const json& obj, const char* key, const std::string& where) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        fail(ErrorKind::config, std::string("key '") + key + "' in " + where + " has the wrong type");
    }
}

template <class T>
void read(const json& obj, const char* key, T& out, const std::string& where) {
    if (obj.contains(key)) out = get<T>(obj, key, where);
}

std::vector<RunMode> read_modes(const json& obj, const char* key, const std::string& where) {
    std::vector<RunMode> out;
    for (const auto& name : get<std::vector<std::string>>(obj, key, where)) out.push_back(parse_run_mode(name));
    return out;
}

void parse_verify(const json& v, VerifyGrid& grid) {
    const std::string where = "verify";
    require(v.is_object(), ErrorKind::config, "verify must be an object");
    reject_unknown(v, {"scenarios", "K", "S", "rho_db", "alpha", "sigma_delta", "trials"}, where);
    if (v.contains("scenarios")) grid.scenarios = read_modes(v, "scenarios", where);
    read(v, "K", grid.K, where);
    read(v, "S", grid.S, where);
    read(v, "rho_db", grid.rho_db, where);
    read(v, "alpha", grid.alpha, where);
    read(v, "sigma_delta", grid.sigma_delta, where);
    read(v, "trials", grid.trials, where);
    require(grid.trials >= 10000, ErrorKind::config, "verify.trials must be at least 10000");
    for (auto s : grid.scenarios)
        require(s != RunMode::noiseless, ErrorKind::config, "verify has no noiseless scenario");
    for (int k : grid.K) require(k >= 1, ErrorKind::config, "verify.K entries must be >= 1");
    for (double s : grid.S) require(s > 0.0, ErrorKind::config, "verify.S entries must be positive");
    for (double a : grid.alpha) require(a > 0.0 && a <= 1.0, ErrorKind::config, "verify.alpha must lie in (0, 1]");
    for (double s : grid.sigma_delta) require(s >= 0.0, ErrorKind::config, "verify.sigma_delta must be >= 0");
}

void parse_sweep(const json& v, SweepGrid& grid) {
    const std::string where = "sweep";
    require(v.is_object(), ErrorKind::config, "sweep must be an object");
    reject_unknown(v, {"scenarios", "K", "rho_db", "alpha", "sigma_delta", "constants"}, where);
    if (v.contains("scenarios")) {
        grid.scenarios.clear();
        for (const auto& name : get<std::vector<std::string>>(v, "scenarios", where))
            grid.scenarios.push_back(parse_bound_scenario(name));
    }
    read(v, "K", grid.K, where);
    read(v, "rho_db", grid.rho_db, where);
    read(v, "alpha", grid.alpha, where);
    read(v, "sigma_delta", grid.sigma_delta, where);
    for (int k : grid.K) require(k >= 1, ErrorKind::config, "sweep.K entries must be >= 1");
    for (double a : grid.alpha) require(a > 0.0 && a <= 1.0, ErrorKind::config, "sweep.alpha must lie in (0, 1]");
    if (v.contains("constants")) {
        const auto& c = v.at("constants");
        const std::string cw = "sweep.constants";
        require(c.is_object(), ErrorKind::config, "sweep.constants must be an object");
        reject_unknown(c, {"L1", "sigma1", "F0", "Fstar", "gamma", "N"}, cw);
        LandscapeConstants lc;
        lc.L1 = get<double>(c, "L1", cw);
        lc.sigma1 = get<double>(c, "sigma1", cw);
        lc.F0 = get<double>(c, "F0", cw);
        lc.Fstar = get<double>(c, "Fstar", cw);
        read(c, "gamma", lc.gamma, cw);
        read(c, "N", lc.N, cw);
        grid.constants = lc;
    }
}

} // namespace

RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::config, std::string("config is not valid JSON: ") + e.what());
    }
    require(doc.is_object(), ErrorKind::config, "config must be a JSON object");
    const std::string where = "config";
    reject_unknown(doc,
                   {"seed", "K", "M", "N", "q", "snr_db", "mode", "modes", "g_th", "gamma", "sigma_delta",
                    "landscape", "modulation", "dataset_path", "output_dir", "P0", "samples_per_device",
                    "csi_family", "csi_real_only", "lambda", "eta", "batch_size", "population_K", "repeats",
                    "verify", "sweep"},
                   where);

    RunConfig cfg;
    read(doc, "seed", cfg.seed, where);
    read(doc, "K", cfg.K, where);
    read(doc, "M", cfg.M, where);
    read(doc, "N", cfg.N, where);
    read(doc, "q", cfg.q, where);
    read(doc, "snr_db", cfg.snr_db, where);
    if (doc.contains("mode")) cfg.mode = parse_run_mode(get<std::string>(doc, "mode", where));
    if (doc.contains("modes")) cfg.modes = read_modes(doc, "modes", where);
    read(doc, "g_th", cfg.g_th, where);
    read(doc, "gamma", cfg.gamma, where);
    read(doc, "sigma_delta", cfg.sigma_delta, where);
    if (doc.contains("landscape")) {
        const auto name = get<std::string>(doc, "landscape", where);
        if (name == "quadratic") cfg.landscape = LandscapeKind::quadratic;
        else if (name == "logistic") cfg.landscape = LandscapeKind::logistic;
        else fail(ErrorKind::config, "unknown landscape '" + name + "'");
    }
    if (doc.contains("modulation")) {
        const auto name = get<std::string>(doc, "modulation", where);
        if (name == "bpsk") cfg.modulation = Modulation::bpsk;
        else if (name == "qam4") cfg.modulation = Modulation::qam4;
        else fail(ErrorKind::config, "unknown modulation '" + name + "'");
    }
    if (doc.contains("dataset_path")) {
        std::filesystem::path p = get<std::string>(doc, "dataset_path", where);
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        cfg.dataset_path = p;
    }
    if (doc.contains("output_dir")) cfg.output_dir = get<std::string>(doc, "output_dir", where);
    read(doc, "P0", cfg.P0, where);
    read(doc, "samples_per_device", cfg.samples_per_device, where);
    if (doc.contains("csi_family")) cfg.csi_family = parse_csi_family(get<std::string>(doc, "csi_family", where));
    read(doc, "csi_real_only", cfg.csi_real_only, where);
    read(doc, "lambda", cfg.lambda, where);
    if (doc.contains("eta")) cfg.eta = get<double>(doc, "eta", where);
    if (doc.contains("batch_size")) cfg.batch_size = get<std::size_t>(doc, "batch_size", where);
    read(doc, "population_K", cfg.population_K, where);
    read(doc, "repeats", cfg.repeats, where);
    if (doc.contains("verify")) parse_verify(doc.at("verify"), cfg.verify);
    if (doc.contains("sweep")) parse_sweep(doc.at("sweep"), cfg.sweep);

    require(cfg.K >= 1, ErrorKind::config, "K must be at least 1");
    require(cfg.M >= 1, ErrorKind::config, "M must be at least 1");
    require(cfg.N >= 1, ErrorKind::config, "N must be at least 1");
    require(cfg.gamma > 0.0, ErrorKind::config, "gamma must be positive");
    require(cfg.P0 > 0.0, ErrorKind::config, "P0 must be positive");
    require(cfg.g_th >= 0.0, ErrorKind::config, "g_th must be non-negative");
    require(cfg.sigma_delta >= 0.0, ErrorKind::config, "sigma_delta must be non-negative");
    require(std::isfinite(cfg.snr_db), ErrorKind::config, "snr_db must be finite");
    require(cfg.repeats >= 1, ErrorKind::config, "repeats must be at least 1");
    require(!cfg.eta || *cfg.eta > 0.0, ErrorKind::config, "eta must be positive");
    require(!cfg.batch_size || *cfg.batch_size >= 1, ErrorKind::config, "batch_size must be at least 1");
    for (int k : cfg.population_K) require(k >= 1, ErrorKind::config, "population_K entries must be >= 1");
    if (cfg.landscape == LandscapeKind::logistic) {
        require(cfg.dataset_path.has_value(), ErrorKind::config, "logistic landscape needs dataset_path");
        if (!std::filesystem::exists(*cfg.dataset_path))
            fail(ErrorKind::config, "dataset '" + cfg.dataset_path->string() + "' does not exist");
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::config, "cannot open config '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path.parent_path());
}

} // namespace obda
