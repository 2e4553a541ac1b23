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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "obda/parallel.hpp"
#include "obda/rng.hpp"

namespace obda {

enum class ChannelMode { awgn, fading_perfect_csi, fading_imperfect_csi };

std::string to_string(ChannelMode mode);
ChannelMode parse_channel_mode(const std::string& name);

/// Exponential integral E1(x) = int_x^inf exp(-t)/t dt for x > 0, which is
/// what the power-scaling formula calls Ei.  Series below x = 1, Lentz
/// continued fraction above; relative error below 1e-13 on (0, 700].
double exp_integral_ei(double x);

/// Truncated channel-inversion power control.
struct PowerPolicy {
    double P0 = 1.0;       // long-term power budget over all sub-channels
    std::size_t M = 1;     // sub-channels
    double g_th = 0.0;     // power-cutoff threshold on |h|^2
    double rho0 = 1.0;     // receive power scaling
    double alpha = 1.0;    // non-truncation probability
    ChannelMode mode = ChannelMode::awgn;
};

/// awgn: rho0 = P0/M, alpha = 1, no cutoff.  Fading: rho0 = P0/(M*E1(g_th)),
/// alpha = exp(-g_th); g_th must be positive.
PowerPolicy derive_policy(double P0, std::size_t M, double g_th, ChannelMode mode);

/// Per-parameter power coefficient p computed from the estimated channel:
/// sqrt(rho0) * conj(h_est) / |h_est|^2 above the cutoff, 0 below it.
std::complex<double> inversion_coefficient(std::complex<double> h_est, const PowerPolicy& policy) noexcept;

enum class CsiFamily { uniform, truncated_gaussian };

std::string to_string(CsiFamily family);
CsiFamily parse_csi_family(const std::string& name);

/// Bounded zero-mean additive channel-estimation error with total variance
/// sigma_delta^2.
///
/// uniform: sigma*sqrt(3/2)*(U1 + iU2), U ~ U[-1, 1]; |Delta| <= sigma*sqrt(3).
/// truncated_gaussian: CN(0, s^2) conditioned on |Delta| <= 2.5*sigma, with s
/// solved so the conditioned variance is sigma^2.
/// real_only keeps the same variance and bound on the real axis.
struct CsiErrorModel {
    double sigma_delta = 0.0;
    CsiFamily family = CsiFamily::uniform;
    bool real_only = false;

    double delta_max() const noexcept;
    /// Throws config when delta_max > 0.3*sqrt(g_th) or sigma_delta < 0.
    void validate(double g_th) const;
    std::complex<double> draw(rng::Stream& stream) const;

    // Untruncated Gaussian scale for the truncated family (cached).
    double gaussian_scale() const;
};

/// Channel coefficients for one OFDM symbol: K devices x `width` occupied
/// sub-channels, plus the estimates used for power control.
struct ChannelRealization {
    std::size_t K = 0;
    std::size_t width = 0;
    std::vector<std::complex<double>> h;
    std::vector<std::complex<double>> h_hat;

    std::complex<double> at(std::size_t k, std::size_t m) const noexcept { return h[k * width + m]; }
    std::complex<double> estimate(std::size_t k, std::size_t m) const noexcept { return h_hat[k * width + m]; }
};

/// Addresses the counter-based streams of one OFDM symbol in one round.
struct SymbolKey {
    std::uint64_t seed = 0;
    std::uint32_t round = 0;
    std::uint32_t symbol = 0;
};

/// awgn: h = 1 everywhere.  Fading: i.i.d. CN(0,1) per device, sub-channel and
/// symbol, drawn from stream (seed, channel, round, k, symbol).  Imperfect CSI
/// adds Delta from stream (seed, csi, round, k, symbol); otherwise h_hat = h.
ChannelRealization sample_channel(std::size_t K, std::size_t width, const PowerPolicy& policy,
                                  const CsiErrorModel& csi, const SymbolKey& key,
                                  Exec exec = Exec::parallel);

/// h + Delta elementwise.
std::vector<std::complex<double>> perturb_csi(std::span<const std::complex<double>> h,
                                              const CsiErrorModel& model, double g_th,
                                              rng::Stream& stream);

struct PowerCheck {
    double mean_power = 0.0;     // Monte Carlo E[|p|^2]
    double truncation_rate = 0.0;
    std::uint64_t trials = 0;
};

/// Monte Carlo estimate of the per-sub-channel transmit power under the
/// policy.  Equals P0/M up to sampling error for fading modes; exactly P0/M
/// for awgn.
PowerCheck empirical_power_check(const PowerPolicy& policy, std::uint64_t trials, std::uint64_t seed,
                                 Exec exec = Exec::parallel);

} // namespace obda
