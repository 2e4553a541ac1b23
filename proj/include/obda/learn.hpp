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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "obda/core.hpp"
#include "obda/rng.hpp"

namespace obda {

struct Sample {
    std::vector<double> x;
    int label = 0;
};

struct DeviceDataset {
    std::vector<Sample> samples;
    std::size_t batch_size = 1;

    std::size_t size() const noexcept { return samples.size(); }
};

struct ModelState {
    GradientVector w;
    std::uint64_t round_index = 0;
};

struct GradientNoiseProfile {
    std::vector<double> sigma;
};

/// Per-sample loss model plus the pooled data that defines the global loss
/// F(w) = mean over all device samples.
class LossLandscape {
public:
    explicit LossLandscape(std::vector<Sample> pool) : pool_(std::move(pool)) {}
    virtual ~LossLandscape() = default;

    virtual std::string name() const = 0;
    virtual std::size_t dimension() const = 0;
    virtual double sample_loss(std::span<const double> w, const Sample& s) const = 0;
    /// out += scale * grad f(w; s)
    virtual void accumulate_gradient(std::span<const double> w, const Sample& s, double scale,
                                     std::span<double> out) const = 0;
    /// Per-coordinate smoothness constants L_i.
    virtual std::span<const double> smoothness() const = 0;
    /// F* with F(w) >= F* for all w.
    virtual double lower_bound() const = 0;

    double loss(const GradientVector& w) const;
    GradientVector full_gradient(const GradientVector& w) const;
    GradientVector sample_gradient(const GradientVector& w, const Sample& s) const;
    const std::vector<Sample>& pool() const noexcept { return pool_; }

private:
    std::vector<Sample> pool_;
};

/// f(w; x) = 1/2 sum_i c_i (w_i - x_i)^2.  Device data are standardised so
/// every device has per-coordinate mean mu_i and population spread s_i
/// exactly; hence L_i = c_i, sigma_i = c_i s_i, F* = 1/2 sum c_i s_i^2.
class QuadraticLandscape final : public LossLandscape {
public:
    QuadraticLandscape(std::vector<double> curvature, std::vector<double> center, std::vector<double> spread,
                       std::vector<Sample> pool);

    std::string name() const override { return "quadratic"; }
    std::size_t dimension() const override { return curvature_.size(); }
    double sample_loss(std::span<const double> w, const Sample& s) const override;
    void accumulate_gradient(std::span<const double> w, const Sample& s, double scale,
                             std::span<double> out) const override;
    std::span<const double> smoothness() const override { return curvature_; }
    double lower_bound() const override;

    std::span<const double> center() const noexcept { return center_; }
    /// Analytic per-coordinate std of single-sample gradients.
    std::vector<double> gradient_sigma() const;

private:
    std::vector<double> curvature_;
    std::vector<double> center_;
    std::vector<double> spread_;
};

/// L2-regularised logistic regression on features x with labels {0,1}; the
/// last parameter is the bias.  With x~ = (x, 1),
/// L_i = max_j |x~_ji| ||x~_j||_1 / 4 + lambda bounds the Hessian from above
/// as a diagonal matrix; F* = 0.
class LogisticLandscape final : public LossLandscape {
public:
    LogisticLandscape(std::size_t features, double lambda, std::vector<Sample> pool);

    std::string name() const override { return "logistic"; }
    std::size_t dimension() const override { return features_ + 1; }
    double sample_loss(std::span<const double> w, const Sample& s) const override;
    void accumulate_gradient(std::span<const double> w, const Sample& s, double scale,
                             std::span<double> out) const override;
    std::span<const double> smoothness() const override { return smoothness_; }
    double lower_bound() const override { return 0.0; }

    double accuracy(const GradientVector& w, std::span<const Sample> test) const;

private:
    std::size_t features_;
    double lambda_;
    std::vector<double> smoothness_;
};

/// A ready-to-train problem: landscape, per-device data, held-out split and
/// initial model.
struct Problem {
    std::shared_ptr<const LossLandscape> landscape;
    std::vector<DeviceDataset> devices;
    std::vector<Sample> test;
    GradientVector w0;
    std::optional<std::vector<double>> sigma; // analytic, when known
};

/// Quadratic problem with q coordinates, K devices of D samples each.
/// Curvature cycles through {0.5, 1, 1.5, 2}, centers are U[-1, 1] and the
/// sample spread is one; w0 = 0.
Problem make_quadratic_problem(std::size_t q, std::size_t K, std::size_t D, std::uint64_t seed);

/// Logistic problem: seed-deterministic 80/20 split of `data`, then K devices
/// each take D consecutive samples of the shuffled training pool (wrapping
/// around when K*D exceeds it).  D = 0 means floor(train / K).
Problem make_logistic_problem(const std::vector<Sample>& data, std::size_t K, std::size_t D,
                              std::uint64_t seed, double lambda = 1e-3);

/// Whitespace- or comma-separated rows: features, then an integer label.
std::vector<Sample> load_dataset(const std::string& path);

/// Mean gradient over n_b samples drawn without replacement.
GradientVector local_gradient(const LossLandscape& landscape, const ModelState& model,
                              const DeviceDataset& dataset, rng::Stream& stream);

/// w - eta * v with the round index advanced.
ModelState apply_update(const ModelState& model, const SignVector& v, double eta);

struct Hyperparams {
    double eta = 0.0;
    std::size_t n_b = 1;
    bool clamped = false; // ceil(N/gamma) exceeded the dataset size
};

/// n_b = ceil(N / gamma) clamped to [1, D]; eta = 1 / sqrt(||L||_1 n_b).
Hyperparams theorem_hyperparams(std::span<const double> L, int N, double gamma, std::size_t D);

/// Per-coordinate std of single-sample gradients around the full gradient,
/// inflated by `margin` (default 20%).
GradientNoiseProfile estimate_noise_profile(const LossLandscape& landscape, const ModelState& model,
                                            const DeviceDataset& dataset, std::size_t trials,
                                            rng::Stream& stream, double margin = 0.2);

/// Per-coordinate skewness of single-sample gradient noise (diagnostic).
std::vector<double> noise_skewness(const LossLandscape& landscape, const ModelState& model,
                                   const DeviceDataset& dataset, std::size_t trials, rng::Stream& stream);

} // namespace obda
