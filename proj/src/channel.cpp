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

#include "obda/channel.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "obda/error.hpp"

namespace obda {

std::string to_string(ChannelMode mode) {
    switch (mode) {
    case ChannelMode::awgn: return "awgn";
    case ChannelMode::fading_perfect_csi: return "fading_perfect_csi";
    case ChannelMode::fading_imperfect_csi: return "fading_imperfect_csi";
    }
    return "?";
}

ChannelMode parse_channel_mode(const std::string& name) {
    if (name == "awgn") return ChannelMode::awgn;
    if (name == "fading_perfect_csi") return ChannelMode::fading_perfect_csi;
    if (name == "fading_imperfect_csi") return ChannelMode::fading_imperfect_csi;
    fail(ErrorKind::config, "unknown channel mode '" + name + "'");
}

double exp_integral_ei(double x) {
    if (!(x > 0.0)) fail(ErrorKind::domain, "E1(x) requires x > 0");
    constexpr double eps = 1e-17;
    constexpr int max_iter = 10000;
    if (x <= 1.0) {
        // E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
        double term = 1.0;
        double sum = 0.0;
        for (int k = 1; k < max_iter; ++k) {
            term *= -x / k;
            const double add = term / k;
            sum += add;
            if (std::abs(add) < eps * std::abs(sum)) break;
        }
        return -std::numbers::egamma - std::log(x) - sum;
    }
    // Modified Lentz on exp(-x) / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...)))
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < max_iter; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h * std::exp(-x);
}

PowerPolicy derive_policy(double P0, std::size_t M, double g_th, ChannelMode mode) {
    require(P0 > 0.0 && std::isfinite(P0), ErrorKind::config, "power budget P0 must be positive");
    require(M >= 1, ErrorKind::config, "sub-channel count M must be at least 1");
    require(g_th >= 0.0 && std::isfinite(g_th), ErrorKind::config, "cutoff threshold g_th must be non-negative");
    PowerPolicy p;
    p.P0 = P0;
    p.M = M;
    p.mode = mode;
    if (mode == ChannelMode::awgn) {
        // Unit gains: no power control, nothing truncated.
        p.g_th = 0.0;
        p.rho0 = P0 / static_cast<double>(M);
        p.alpha = 1.0;
        return p;
    }
    if (g_th == 0.0)
        fail(ErrorKind::config, "fading modes need g_th > 0: full channel inversion has unbounded average power");
    p.g_th = g_th;
    p.rho0 = P0 / (static_cast<double>(M) * exp_integral_ei(g_th));
    p.alpha = std::exp(-g_th);
    return p;
}

std::complex<double> inversion_coefficient(std::complex<double> h_est, const PowerPolicy& policy) noexcept {
    const double gain = std::norm(h_est);
    if (gain < policy.g_th || gain == 0.0) return {0.0, 0.0};
    return std::sqrt(policy.rho0) * std::conj(h_est) / gain;
}

std::string to_string(CsiFamily family) {
    return family == CsiFamily::uniform ? "uniform" : "truncated_gaussian";
}

CsiFamily parse_csi_family(const std::string& name) {
    if (name == "uniform") return CsiFamily::uniform;
    if (name == "truncated_gaussian") return CsiFamily::truncated_gaussian;
    fail(ErrorKind::config, "unknown CSI error family '" + name + "'");
}

namespace {

constexpr double kTruncationRatio = 2.5;

// Solves for c = R/s such that the variance of the truncated law equals
// sigma^2 with R = 2.5 sigma.  `ratio(c)` is Var/s^2.
double solve_cutoff(const std::function<double(double)>& ratio) {
    auto excess = [&](double c) {
        return kTruncationRatio * kTruncationRatio / (c * c) * ratio(c) - 1.0;
    };
    double lo = 1e-3, hi = 50.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0.0) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double truncated_scale_over_sigma(bool real_only) {
    static const double complex_c = solve_cutoff([](double c) {
        const double e = std::exp(-c * c);
        return 1.0 - c * c * e / (1.0 - e);
    });
    static const double real_c = solve_cutoff([](double c) {
        const double phi = std::exp(-0.5 * c * c) / std::sqrt(2.0 * std::numbers::pi);
        const double mass = std::erf(c / std::numbers::sqrt2);
        return 1.0 - 2.0 * c * phi / mass;
    });
    return kTruncationRatio / (real_only ? real_c : complex_c);
}

} // namespace

double CsiErrorModel::delta_max() const noexcept {
    if (family == CsiFamily::uniform) return sigma_delta * std::sqrt(3.0);
    return sigma_delta * kTruncationRatio;
}

double CsiErrorModel::gaussian_scale() const {
    return sigma_delta * truncated_scale_over_sigma(real_only);
}

void CsiErrorModel::validate(double g_th) const {
    require(sigma_delta >= 0.0 && std::isfinite(sigma_delta), ErrorKind::config,
            "sigma_delta must be non-negative");
    if (delta_max() > 0.3 * std::sqrt(g_th))
        fail(ErrorKind::config, "CSI error bound " + std::to_string(delta_max()) +
                                    " exceeds 0.3*sqrt(g_th) = " + std::to_string(0.3 * std::sqrt(g_th)));
}

std::complex<double> CsiErrorModel::draw(rng::Stream& stream) const {
    if (sigma_delta == 0.0) return {0.0, 0.0};
    if (family == CsiFamily::uniform) {
        if (real_only) return {sigma_delta * std::sqrt(3.0) * (2.0 * stream.uniform() - 1.0), 0.0};
        const double a = sigma_delta * std::sqrt(1.5);
        return {a * (2.0 * stream.uniform() - 1.0), a * (2.0 * stream.uniform() - 1.0)};
    }
    const double s = gaussian_scale();
    const double bound = delta_max();
    for (;;) {
        std::complex<double> d;
        if (real_only) d = {s * stream.normal(), 0.0};
        else d = s * stream.complex_normal();
        if (std::abs(d) <= bound) return d;
    }
}

std::vector<std::complex<double>> perturb_csi(std::span<const std::complex<double>> h,
                                              const CsiErrorModel& model, double g_th,
                                              rng::Stream& stream) {
    model.validate(g_th);
    std::vector<std::complex<double>> out(h.begin(), h.end());
    for (auto& v : out) v += model.draw(stream);
    return out;
}

ChannelRealization sample_channel(std::size_t K, std::size_t width, const PowerPolicy& policy,
                                  const CsiErrorModel& csi, const SymbolKey& key, Exec exec) {
    require(K >= 1, ErrorKind::config, "device count K must be at least 1");
    require(width >= 1 && width <= policy.M, ErrorKind::config, "occupied width must be in [1, M]");
    ChannelRealization ch;
    ch.K = K;
    ch.width = width;
    ch.h.assign(K * width, {1.0, 0.0});
    if (policy.mode == ChannelMode::awgn) {
        ch.h_hat = ch.h;
        return ch;
    }
    const bool imperfect = policy.mode == ChannelMode::fading_imperfect_csi;
    if (imperfect) csi.validate(policy.g_th);
    ch.h_hat.resize(K * width);
    for_each_index(exec, K, [&](std::size_t k) {
        const auto dev = static_cast<std::uint32_t>(k);
        rng::Stream gain(key.seed, rng::Purpose::channel, key.round, dev, key.symbol);
        rng::Stream err(key.seed, rng::Purpose::csi, key.round, dev, key.symbol);
        for (std::size_t m = 0; m < width; ++m) {
            const auto h = gain.complex_normal();
            ch.h[k * width + m] = h;
            ch.h_hat[k * width + m] = imperfect ? h + csi.draw(err) : h;
        }
    });
    return ch;
}

namespace {

struct PowerPartial {
    double power = 0.0;
    std::uint64_t truncated = 0;

    PowerPartial& operator+=(const PowerPartial& o) {
        power += o.power;
        truncated += o.truncated;
        return *this;
    }
};

} // namespace

PowerCheck empirical_power_check(const PowerPolicy& policy, std::uint64_t trials, std::uint64_t seed,
                                 Exec exec) {
    require(trials >= 1, ErrorKind::config, "power check needs at least one trial");
    PowerCheck out;
    out.trials = trials;
    if (policy.mode == ChannelMode::awgn) {
        out.mean_power = policy.rho0;
        return out;
    }
    constexpr std::size_t chunk = 1 << 16;
    const auto total = chunked_reduce<PowerPartial>(exec, trials, chunk, [&](std::size_t begin, std::size_t end) {
        rng::Stream stream(seed, rng::Purpose::power, static_cast<std::uint32_t>(begin / chunk));
        PowerPartial part;
        double comp = 0.0; // Neumaier compensation
        for (std::size_t t = begin; t < end; ++t) {
            const auto p = inversion_coefficient(stream.complex_normal(), policy);
            const double v = std::norm(p);
            if (v == 0.0) ++part.truncated;
            const double s = part.power + v;
            comp += std::abs(part.power) >= v ? (part.power - s) + v : (v - s) + part.power;
            part.power = s;
        }
        part.power += comp;
        return part;
    });
    out.mean_power = total.power / static_cast<double>(trials);
    out.truncation_rate = static_cast<double>(total.truncated) / static_cast<double>(trials);
    return out;
}

} // namespace obda
