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

#include "obda/learn.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "obda/error.hpp"

namespace obda {

double LossLandscape::loss(const GradientVector& w) const {
    require(!pool_.empty(), ErrorKind::config, "landscape has no samples");
    double acc = 0.0;
    for (const auto& s : pool_) acc += sample_loss(w.values(), s);
    return acc / static_cast<double>(pool_.size());
}

GradientVector LossLandscape::full_gradient(const GradientVector& w) const {
    require(!pool_.empty(), ErrorKind::config, "landscape has no samples");
    std::vector<double> g(dimension(), 0.0);
    const double scale = 1.0 / static_cast<double>(pool_.size());
    for (const auto& s : pool_) accumulate_gradient(w.values(), s, scale, g);
    return GradientVector(std::move(g));
}

GradientVector LossLandscape::sample_gradient(const GradientVector& w, const Sample& s) const {
    std::vector<double> g(dimension(), 0.0);
    accumulate_gradient(w.values(), s, 1.0, g);
    return GradientVector(std::move(g));
}

// --- quadratic ---------------------------------------------------------------

QuadraticLandscape::QuadraticLandscape(std::vector<double> curvature, std::vector<double> center,
                                       std::vector<double> spread, std::vector<Sample> pool)
    : LossLandscape(std::move(pool)),
      curvature_(std::move(curvature)),
      center_(std::move(center)),
      spread_(std::move(spread)) {
    require(curvature_.size() == center_.size() && center_.size() == spread_.size(), ErrorKind::dimension,
            "quadratic parameters differ in length");
    for (double c : curvature_) require(c >= 0.0, ErrorKind::config, "curvature must be non-negative");
}

double QuadraticLandscape::sample_loss(std::span<const double> w, const Sample& s) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < curvature_.size(); ++i) {
        const double d = w[i] - s.x[i];
        acc += curvature_[i] * d * d;
    }
    return 0.5 * acc;
}

void QuadraticLandscape::accumulate_gradient(std::span<const double> w, const Sample& s, double scale,
                                             std::span<double> out) const {
    for (std::size_t i = 0; i < curvature_.size(); ++i) out[i] += scale * curvature_[i] * (w[i] - s.x[i]);
}

double QuadraticLandscape::lower_bound() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < curvature_.size(); ++i) acc += curvature_[i] * spread_[i] * spread_[i];
    return 0.5 * acc;
}

std::vector<double> QuadraticLandscape::gradient_sigma() const {
    std::vector<double> out(curvature_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = curvature_[i] * spread_[i];
    return out;
}

Problem make_quadratic_problem(std::size_t q, std::size_t K, std::size_t D, std::uint64_t seed) {
    require(q >= 1, ErrorKind::config, "q must be at least 1");
    require(K >= 1, ErrorKind::config, "K must be at least 1");
    require(D >= 2, ErrorKind::config, "quadratic devices need at least 2 samples");

    std::vector<double> curvature(q), center(q), spread(q, 1.0);
    rng::Stream params(seed, rng::Purpose::landscape);
    for (std::size_t i = 0; i < q; ++i) {
        curvature[i] = 0.5 * static_cast<double>(1 + i % 4);
        center[i] = 2.0 * params.uniform() - 1.0;
    }

    Problem problem;
    problem.devices.resize(K);
    std::vector<Sample> pool;
    pool.reserve(K * D);
    std::vector<double> z(D);
    for (std::size_t k = 0; k < K; ++k) {
        auto& dev = problem.devices[k];
        dev.samples.assign(D, Sample{std::vector<double>(q), 0});
        rng::Stream draw(seed, rng::Purpose::dataset, static_cast<std::uint32_t>(k));
        for (std::size_t i = 0; i < q; ++i) {
            for (auto& v : z) v = draw.normal();
            const double mean = std::accumulate(z.begin(), z.end(), 0.0) / static_cast<double>(D);
            double var = 0.0;
            for (double v : z) var += (v - mean) * (v - mean);
            const double sd = std::sqrt(var / static_cast<double>(D));
            for (std::size_t j = 0; j < D; ++j)
                dev.samples[j].x[i] = center[i] + spread[i] * (z[j] - mean) / sd;
        }
        pool.insert(pool.end(), dev.samples.begin(), dev.samples.end());
    }
    auto landscape = std::make_shared<QuadraticLandscape>(curvature, center, spread, std::move(pool));
    problem.sigma = landscape->gradient_sigma();
    problem.landscape = std::move(landscape);
    problem.w0 = GradientVector::zeros(q);
    return problem;
}

// --- logistic ----------------------------------------------------------------

namespace {

double margin_of(std::span<const double> w, const Sample& s, std::size_t features) {
    double z = w[features];
    for (std::size_t i = 0; i < features; ++i) z += w[i] * s.x[i];
    return z;
}

// log(1 + exp(-m)) without overflow.
double softplus_neg(double m) {
    return m > 0.0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m));
}

} // namespace

LogisticLandscape::LogisticLandscape(std::size_t features, double lambda, std::vector<Sample> pool)
    : LossLandscape(std::move(pool)), features_(features), lambda_(lambda), smoothness_(features + 1, 0.0) {
    require(lambda >= 0.0, ErrorKind::config, "lambda must be non-negative");
    // x x^T <= diag(|x_i| ||x||_1) (Cauchy-Schwarz), and the logistic curvature
    // is at most 1/4.
    for (const auto& s : this->pool()) {
        require(s.x.size() == features_, ErrorKind::dimension, "sample has the wrong feature count");
        require(s.label == 0 || s.label == 1, ErrorKind::config, "logistic landscape needs labels in {0, 1}");
        double row = 1.0;
        for (double v : s.x) row += std::abs(v);
        for (std::size_t i = 0; i < features_; ++i)
            smoothness_[i] = std::max(smoothness_[i], 0.25 * std::abs(s.x[i]) * row);
        smoothness_[features_] = std::max(smoothness_[features_], 0.25 * row);
    }
    for (auto& l : smoothness_) l += lambda_;
}

double LogisticLandscape::sample_loss(std::span<const double> w, const Sample& s) const {
    const double y = s.label == 1 ? 1.0 : -1.0;
    double reg = 0.0;
    for (double v : w) reg += v * v;
    return softplus_neg(y * margin_of(w, s, features_)) + 0.5 * lambda_ * reg;
}

void LogisticLandscape::accumulate_gradient(std::span<const double> w, const Sample& s, double scale,
                                            std::span<double> out) const {
    const double y = s.label == 1 ? 1.0 : -1.0;
    const double m = y * margin_of(w, s, features_);
    // d/dm log(1 + e^{-m}) = -1 / (1 + e^{m})
    const double coef = -y / (1.0 + std::exp(m));
    for (std::size_t i = 0; i < features_; ++i) out[i] += scale * (coef * s.x[i] + lambda_ * w[i]);
    out[features_] += scale * (coef + lambda_ * w[features_]);
}

double LogisticLandscape::accuracy(const GradientVector& w, std::span<const Sample> test) const {
    if (test.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& s : test) {
        const int predicted = margin_of(w.values(), s, features_) >= 0.0 ? 1 : 0;
        if (predicted == s.label) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(test.size());
}

Problem make_logistic_problem(const std::vector<Sample>& data, std::size_t K, std::size_t D,
                              std::uint64_t seed, double lambda) {
    require(data.size() >= 5, ErrorKind::config, "dataset too small for a train/test split");
    require(K >= 1, ErrorKind::config, "K must be at least 1");
    const std::size_t features = data.front().x.size();

    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng::Stream shuffle(seed, rng::Purpose::split);
    for (std::size_t i = order.size() - 1; i > 0; --i) std::swap(order[i], order[shuffle.below(i + 1)]);

    const auto n_test = static_cast<std::size_t>(std::llround(0.2 * static_cast<double>(data.size())));
    Problem problem;
    std::vector<Sample> train;
    for (std::size_t j = 0; j < order.size(); ++j) {
        const Sample& s = data[order[j]];
        require(s.x.size() == features, ErrorKind::dimension, "samples differ in feature count");
        (j < n_test ? problem.test : train).push_back(s);
    }
    if (D == 0) D = train.size() / K;
    require(D >= 1, ErrorKind::config, "not enough training samples for one per device");

    problem.devices.resize(K);
    std::vector<Sample> pool;
    pool.reserve(K * D);
    for (std::size_t k = 0; k < K; ++k) {
        auto& dev = problem.devices[k];
        for (std::size_t j = 0; j < D; ++j) dev.samples.push_back(train[(k * D + j) % train.size()]);
        pool.insert(pool.end(), dev.samples.begin(), dev.samples.end());
    }
    problem.landscape = std::make_shared<LogisticLandscape>(features, lambda, std::move(pool));
    problem.w0 = GradientVector::zeros(features + 1);
    return problem;
}

std::vector<Sample> load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot open dataset '" + path + "'");
    std::vector<Sample> out;
    std::string line;
    std::size_t lineno = 0;
    std::size_t features = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        std::vector<double> fields;
        std::string tok;
        while (row >> tok) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v))
                fail(ErrorKind::config, path + ":" + std::to_string(lineno) + ": bad number '" + tok + "'");
            fields.push_back(v);
        }
        if (fields.empty()) continue;
        require(fields.size() >= 2, ErrorKind::config, path + ":" + std::to_string(lineno) + ": need features and a label");
        const double label = fields.back();
        if (label != std::floor(label))
            fail(ErrorKind::config, path + ":" + std::to_string(lineno) + ": label is not an integer");
        fields.pop_back();
        if (out.empty()) features = fields.size();
        require(fields.size() == features, ErrorKind::config,
                path + ":" + std::to_string(lineno) + ": inconsistent feature count");
        out.push_back(Sample{std::move(fields), static_cast<int>(label)});
    }
    require(!out.empty(), ErrorKind::config, "dataset '" + path + "' is empty");
    return out;
}

// --- training primitives -----------------------------------------------------

GradientVector local_gradient(const LossLandscape& landscape, const ModelState& model,
                              const DeviceDataset& dataset, rng::Stream& stream) {
    const std::size_t D = dataset.size();
    require(D >= 1, ErrorKind::config, "device dataset is empty");
    const std::size_t n_b = dataset.batch_size;
    require(n_b >= 1 && n_b <= D, ErrorKind::config, "batch size must be in [1, D]");

    std::vector<double> g(landscape.dimension(), 0.0);
    const double scale = 1.0 / static_cast<double>(n_b);
    if (n_b == D) {
        for (const auto& s : dataset.samples) landscape.accumulate_gradient(model.w.values(), s, scale, g);
        return GradientVector(std::move(g));
    }
    // Partial Fisher-Yates over indices: the first n_b slots form the batch.
    std::vector<std::size_t> idx(D);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t j = 0; j < n_b; ++j) {
        std::swap(idx[j], idx[j + stream.below(D - j)]);
        landscape.accumulate_gradient(model.w.values(), dataset.samples[idx[j]], scale, g);
    }
    return GradientVector(std::move(g));
}

ModelState apply_update(const ModelState& model, const SignVector& v, double eta) {
    require(eta > 0.0 && std::isfinite(eta), ErrorKind::config, "learning rate must be positive");
    require(v.size() == model.w.size(), ErrorKind::dimension, "update length differs from model");
    std::vector<double> w(model.w.values().begin(), model.w.values().end());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= eta * v[i];
    return ModelState{GradientVector(std::move(w)), model.round_index + 1};
}

Hyperparams theorem_hyperparams(std::span<const double> L, int N, double gamma, std::size_t D) {
    require(N >= 1, ErrorKind::config, "round count N must be at least 1");
    require(gamma > 0.0 && std::isfinite(gamma), ErrorKind::config, "gamma must be positive");
    require(D >= 1, ErrorKind::config, "dataset size must be at least 1");
    const double l1 = l1_norm(L);
    if (!(l1 > 0.0)) fail(ErrorKind::degenerate, "smoothness vector has zero l1 norm");
    Hyperparams hp;
    const double raw = std::ceil(static_cast<double>(N) / gamma);
    hp.n_b = static_cast<std::size_t>(std::max(1.0, raw));
    if (hp.n_b > D) {
        hp.n_b = D;
        hp.clamped = true;
    }
    hp.eta = 1.0 / std::sqrt(l1 * static_cast<double>(hp.n_b));
    return hp;
}

namespace {

// Deviations of `trials` single-sample gradients from the full gradient,
// row-major trials x q.
std::vector<double> sample_deviations(const LossLandscape& landscape, const ModelState& model,
                                      const DeviceDataset& dataset, std::size_t trials, rng::Stream& stream) {
    require(dataset.size() >= 1, ErrorKind::config, "device dataset is empty");
    const std::size_t q = landscape.dimension();
    const GradientVector g = landscape.full_gradient(model.w);
    std::vector<double> dev(trials * q, 0.0);
    for (std::size_t t = 0; t < trials; ++t) {
        const Sample& s = dataset.samples[stream.below(dataset.size())];
        std::span<double> row(dev.data() + t * q, q);
        landscape.accumulate_gradient(model.w.values(), s, 1.0, row);
        for (std::size_t i = 0; i < q; ++i) row[i] -= g[i];
    }
    return dev;
}

} // namespace

GradientNoiseProfile estimate_noise_profile(const LossLandscape& landscape, const ModelState& model,
                                            const DeviceDataset& dataset, std::size_t trials,
                                            rng::Stream& stream, double margin) {
    require(trials >= 30, ErrorKind::config, "noise profile needs at least 30 trials");
    const std::size_t q = landscape.dimension();
    const auto dev = sample_deviations(landscape, model, dataset, trials, stream);
    GradientNoiseProfile out;
    out.sigma.assign(q, 0.0);
    for (std::size_t t = 0; t < trials; ++t)
        for (std::size_t i = 0; i < q; ++i) out.sigma[i] += dev[t * q + i] * dev[t * q + i];
    for (auto& s : out.sigma) s = (1.0 + margin) * std::sqrt(s / static_cast<double>(trials));
    return out;
}

std::vector<double> noise_skewness(const LossLandscape& landscape, const ModelState& model,
                                   const DeviceDataset& dataset, std::size_t trials, rng::Stream& stream) {
    require(trials >= 3, ErrorKind::config, "skewness needs at least 3 trials");
    const std::size_t q = landscape.dimension();
    const auto dev = sample_deviations(landscape, model, dataset, trials, stream);
    std::vector<double> out(q, 0.0);
    const double n = static_cast<double>(trials);
    for (std::size_t i = 0; i < q; ++i) {
        double mean = 0.0;
        for (std::size_t t = 0; t < trials; ++t) mean += dev[t * q + i];
        mean /= n;
        double m2 = 0.0, m3 = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            const double d = dev[t * q + i] - mean;
            m2 += d * d;
            m3 += d * d * d;
        }
        m2 /= n;
        m3 /= n;
        out[i] = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
    }
    return out;
}

} // namespace obda
