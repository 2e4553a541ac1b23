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

// Closed-form bit-error and convergence bounds for one-bit over-the-air
// aggregation with majority-vote decoding.
//
// Notation: K devices, S the gradient-signal-to-data-noise ratio of one
// coordinate, rho = rho0 / sigma_z^2 the receive SNR, alpha the probability a
// parameter survives the power cutoff, sigma_delta and delta_max the CSI error
// standard deviation and bound.
//
// Probability bounds are returned raw; they can exceed 1/2.  Use
// clamp_probability() before comparing them with an error rate.

#include <string>

namespace obda {

struct ScenarioParams {
    int K = 1;
    double rho = 1.0;
    double alpha = 1.0;
    double sigma_delta = 0.0;
    double g_th = 0.0;
    double delta_max = 0.0;
};

struct LandscapeConstants {
    double L1 = 0.0;     // ||L||_1
    double sigma1 = 0.0; // ||sigma||_1
    double F0 = 0.0;
    double Fstar = 0.0;
    double gamma = 1.0;
    int N = 1;
};

enum class BoundScenario { noiseless, awgn, fading, imperfect };

std::string to_string(BoundScenario s);
BoundScenario parse_bound_scenario(const std::string& name);

struct BoundReport {
    BoundScenario scenario = BoundScenario::noiseless;
    double a = 1.0;   // scaling factor
    double b = 0.0;   // bias term
    double rhs = 0.0; // (a/sqrt(N)) (sqrt(L1)(F0 - F* + gamma/2) + 2 gamma sigma1 / sqrt(K) + b)
};

/// min(p, 1/2).
double clamp_probability(double p) noexcept;

/// Single-device sign failure bound from Gauss' inequality:
/// 2/(9 S^2) for S > 2/sqrt(3), else 1/2 - S/(2 sqrt(3)).
double fail_prob_bound(double S);

/// sqrt(n_b) |g| / sigma; +inf when sigma == 0.
double grad_snr(double g, double sigma, int n_b);

/// AWGN: 1/(sqrt(K) S) + 1/(K S sqrt(rho)) + 1/(2 K sqrt(rho)).
double perr_bound_awgn(int K, double S, double rho);

/// Fading, conditioned on K_i transmitting devices; 1/2 when K_i = 0.
double perr_bound_fading_conditional(int K_i, double S, double rho);

/// sum_{k=1}^K (1/k) C(K,k) a^k (1-a)^(K-k).
double binom_f(int K, double alpha);
/// sum_{k=1}^K (1/sqrt(k)) C(K,k) a^k (1-a)^(K-k).
double binom_g(int K, double alpha);

/// Fading with perfect CSI, unconditional:
/// (1-a)^K / 2 + sqrt(6)/(sqrt(aK) S) + (2/(aK)) (1/sqrt(rho)) (1/S + 1/2).
double perr_bound_fading(int K, double alpha, double S, double rho);

/// Fading with imperfect CSI.  Throws domain when sqrt(g_th) <= delta_max.
double perr_bound_imperfect(const ScenarioParams& p, double S);

/// Scaling factor and bias of the convergence bound.  Throws
/// VacuousBoundError when the denominator of `a` is not positive.
BoundReport conv_bound(const ScenarioParams& scenario, const LandscapeConstants& constants,
                       BoundScenario which);

/// Denominator of the scaling factor (1/a); may be <= 0.
double scaling_denominator(const ScenarioParams& scenario, BoundScenario which);

} // namespace obda
