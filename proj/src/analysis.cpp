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

#include "obda/analysis.hpp"

#include <cmath>
#include <limits>

#include "obda/error.hpp"

namespace obda {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

void check_K(int K) { require(K >= 1, ErrorKind::domain, "device count K must be at least 1"); }

void check_alpha(double alpha) {
    require(alpha > 0.0 && alpha <= 1.0, ErrorKind::domain, "alpha must lie in (0, 1]");
}

void check_rho(double rho) { require(rho > 0.0, ErrorKind::domain, "receive SNR rho must be positive"); }

void check_S(double S) { require(S > 0.0, ErrorKind::domain, "S must be positive"); }

double all_truncated(int K, double alpha) { return std::pow(1.0 - alpha, K); }

// sigma_delta / sqrt(sqrt(g_th) - delta_max), the imperfect-CSI error scale.
double csi_term(const ScenarioParams& p) {
    const double margin = std::sqrt(p.g_th) - p.delta_max;
    if (!(margin > 0.0)) fail(ErrorKind::domain, "imperfect-CSI bounds need sqrt(g_th) > delta_max");
    return p.sigma_delta / std::sqrt(margin);
}

// Neumaier-compensated sum of weight(k) * C(K,k) a^k (1-a)^(K-k), k = 1..K.
template <class Weight>
double binomial_moment(int K, double alpha, Weight weight) {
    check_K(K);
    require(alpha >= 0.0 && alpha <= 1.0, ErrorKind::domain, "alpha must lie in [0, 1]");
    if (alpha == 0.0) return 0.0;
    if (alpha == 1.0) return weight(K);
    const double la = std::log(alpha);
    const double lb = std::log1p(-alpha);
    const double lk = std::lgamma(K + 1.0);
    double sum = 0.0;
    double comp = 0.0;
    for (int k = 1; k <= K; ++k) {
        const double log_pmf = lk - std::lgamma(k + 1.0) - std::lgamma(K - k + 1.0) + k * la + (K - k) * lb;
        const double term = weight(k) * std::exp(log_pmf);
        const double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

} // namespace

std::string to_string(BoundScenario s) {
    switch (s) {
    case BoundScenario::noiseless: return "noiseless";
    case BoundScenario::awgn: return "awgn";
    case BoundScenario::fading: return "fading";
    case BoundScenario::imperfect: return "imperfect";
    }
    return "?";
}

BoundScenario parse_bound_scenario(const std::string& name) {
    if (name == "noiseless") return BoundScenario::noiseless;
    if (name == "awgn") return BoundScenario::awgn;
    if (name == "fading" || name == "fading_perfect_csi") return BoundScenario::fading;
    if (name == "imperfect" || name == "fading_imperfect_csi") return BoundScenario::imperfect;
    fail(ErrorKind::config, "unknown bound scenario '" + name + "'");
}

double clamp_probability(double p) noexcept { return p > 0.5 ? 0.5 : p; }

double fail_prob_bound(double S) {
    require(S >= 0.0, ErrorKind::domain, "S must be non-negative");
    if (S > 2.0 / kSqrt3) return 2.0 / (9.0 * S * S);
    return 0.5 - S / (2.0 * kSqrt3);
}

double grad_snr(double g, double sigma, int n_b) {
    require(n_b >= 1, ErrorKind::domain, "batch size must be at least 1");
    require(sigma >= 0.0, ErrorKind::domain, "sigma must be non-negative");
    if (sigma == 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(static_cast<double>(n_b)) * std::abs(g) / sigma;
}

double perr_bound_awgn(int K, double S, double rho) {
    check_K(K);
    check_S(S);
    check_rho(rho);
    const double k = K;
    const double sr = std::sqrt(rho);
    return 1.0 / (std::sqrt(k) * S) + 1.0 / (k * S * sr) + 1.0 / (2.0 * k * sr);
}

double perr_bound_fading_conditional(int K_i, double S, double rho) {
    require(K_i >= 0, ErrorKind::domain, "K_i must be non-negative");
    if (K_i == 0) return 0.5;
    check_S(S);
    check_rho(rho);
    const double k = K_i;
    return 1.0 / (std::sqrt(k) * S) + (1.0 / k) * (1.0 / std::sqrt(rho)) * (1.0 / S + 0.5);
}

double binom_f(int K, double alpha) {
    return binomial_moment(K, alpha, [](int k) { return 1.0 / k; });
}

double binom_g(int K, double alpha) {
    return binomial_moment(K, alpha, [](int k) { return 1.0 / std::sqrt(static_cast<double>(k)); });
}

double perr_bound_fading(int K, double alpha, double S, double rho) {
    check_K(K);
    check_alpha(alpha);
    check_S(S);
    check_rho(rho);
    const double ak = alpha * K;
    return 0.5 * all_truncated(K, alpha) + kSqrt6 / (std::sqrt(ak) * S) +
           (2.0 / ak) * (1.0 / std::sqrt(rho)) * (1.0 / S + 0.5);
}

double perr_bound_imperfect(const ScenarioParams& p, double S) {
    check_K(p.K);
    check_alpha(p.alpha);
    check_S(S);
    check_rho(p.rho);
    const double csi = csi_term(p);
    const double ak = p.alpha * p.K;
    return 0.5 * all_truncated(p.K, p.alpha) + kSqrt6 / std::sqrt(ak) * (1.0 / S + (2.0 / S + 1.0) * csi) +
           (2.0 / ak) * (1.0 / std::sqrt(p.rho)) * (1.0 / S + 0.5);
}

double scaling_denominator(const ScenarioParams& p, BoundScenario which) {
    if (which == BoundScenario::noiseless) return 1.0;
    check_K(p.K);
    check_rho(p.rho);
    const double k = p.K;
    const double sr = std::sqrt(p.rho);
    if (which == BoundScenario::awgn) return 1.0 - 1.0 / (k * sr);
    check_alpha(p.alpha);
    const double ak = p.alpha * k;
    double den = 1.0 - all_truncated(p.K, p.alpha) - 2.0 / (ak * sr);
    if (which == BoundScenario::imperfect) den -= 2.0 * kSqrt6 * csi_term(p) / std::sqrt(ak);
    return den;
}

BoundReport conv_bound(const ScenarioParams& p, const LandscapeConstants& c, BoundScenario which) {
    require(c.N >= 1, ErrorKind::domain, "round count N must be at least 1");
    require(c.gamma > 0.0, ErrorKind::domain, "gamma must be positive");
    require(c.L1 >= 0.0 && c.sigma1 >= 0.0, ErrorKind::domain, "landscape constants must be non-negative");
    check_K(p.K);

    BoundReport r;
    r.scenario = which;
    const double den = scaling_denominator(p, which);
    if (!(den > 0.0))
        throw VacuousBoundError(to_string(which) + " bound is vacuous: scaling denominator " +
                                    std::to_string(den) + " <= 0",
                                den);
    r.a = 1.0 / den;

    const double k = p.K;
    const double gs = c.gamma * c.sigma1;
    switch (which) {
    case BoundScenario::noiseless: r.b = 0.0; break;
    case BoundScenario::awgn: r.b = 2.0 * gs / (k * std::sqrt(p.rho)); break;
    case BoundScenario::fading: r.b = 4.0 * gs / (p.alpha * k * std::sqrt(p.rho)); break;
    case BoundScenario::imperfect: {
        const double ak = p.alpha * k;
        r.b = (4.0 / (ak * std::sqrt(p.rho)) + 4.0 * kSqrt6 * csi_term(p) / std::sqrt(ak)) * gs;
        break;
    }
    }
    const double inner = std::sqrt(c.L1) * (c.F0 - c.Fstar + 0.5 * c.gamma) + 2.0 * gs / std::sqrt(k) + r.b;
    r.rhs = r.a / std::sqrt(static_cast<double>(c.N)) * inner;
    return r;
}

} // namespace obda
