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

#include "obda/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "obda/error.hpp"

namespace obda {

TxFrame build_tx_frame(std::span<const SignVector> signs, Modulation mod) {
    require(!signs.empty(), ErrorKind::dimension, "no devices to transmit");
    const std::size_t q = signs.front().size();
    TxFrame frame;
    frame.K = signs.size();
    frame.L = channel_uses(q, mod);
    frame.data.reserve(frame.K * frame.L);
    for (const auto& s : signs) {
        require(s.size() == q, ErrorKind::dimension, "sign vectors differ in length");
        const auto symbols = modulate(s, mod);
        frame.data.insert(frame.data.end(), symbols.begin(), symbols.end());
    }
    return frame;
}

std::size_t ofdm_symbols(std::size_t channel_uses, std::size_t M) noexcept {
    return (channel_uses + M - 1) / M;
}

std::size_t symbol_width(std::size_t channel_uses, std::size_t M, std::size_t t) noexcept {
    const std::size_t begin = t * M;
    return begin >= channel_uses ? 0 : std::min(M, channel_uses - begin);
}

AggregatedBlock air_superpose(const TxFrame& frame, std::size_t offset, const ChannelRealization& channel,
                              const PowerPolicy& policy, double sigma_z, rng::Stream& noise, Exec exec) {
    if (channel.K != frame.K)
        fail(ErrorKind::dimension, "channel has " + std::to_string(channel.K) + " devices, frame has " +
                                       std::to_string(frame.K));
    require(offset + channel.width <= frame.L, ErrorKind::dimension, "symbol block runs past the frame");
    require(sigma_z >= 0.0 && std::isfinite(sigma_z), ErrorKind::config, "sigma_z must be non-negative");

    const std::size_t width = channel.width;
    AggregatedBlock out;
    out.values.resize(width);
    out.contributing_counts.assign(width, 0);

    // CN(0, sigma_z^2): each quadrature carries sigma_z^2 / 2.
    const double per_dim = sigma_z / std::sqrt(2.0);
    for (std::size_t m = 0; m < width; ++m) {
        const double re = noise.normal();
        const double im = noise.normal();
        out.values[m] = {per_dim * re, per_dim * im};
    }

    for_each_index(exec, width, [&](std::size_t m) {
        std::complex<double> acc{0.0, 0.0};
        int count = 0;
        for (std::size_t k = 0; k < frame.K; ++k) {
            const auto p = inversion_coefficient(channel.estimate(k, m), policy);
            if (p == std::complex<double>{0.0, 0.0}) continue;
            acc += channel.at(k, m) * p * frame.at(k, offset + m);
            ++count;
        }
        out.values[m] += acc;
        out.contributing_counts[m] = count;
    });
    return out;
}

AggregatedBlock air_superpose(std::span<const SignVector> blocks, const ChannelRealization& channel,
                              const PowerPolicy& policy, double sigma_z, rng::Stream& noise, Exec exec) {
    if (blocks.size() != channel.K)
        fail(ErrorKind::dimension, "got " + std::to_string(blocks.size()) + " sign blocks for " +
                                       std::to_string(channel.K) + " channel rows");
    for (const auto& b : blocks)
        require(b.size() == channel.width, ErrorKind::dimension, "sign block width differs from channel width");
    const TxFrame frame = build_tx_frame(blocks, Modulation::bpsk);
    return air_superpose(frame, 0, channel, policy, sigma_z, noise, exec);
}

SignVector majority_vote(std::span<const AggregatedBlock> blocks, std::size_t q, Modulation mod) {
    std::size_t uses = 0;
    for (const auto& b : blocks) uses += b.values.size();
    if (uses != channel_uses(q, mod))
        fail(ErrorKind::framing, "received " + std::to_string(uses) + " channel uses, expected " +
                                     std::to_string(channel_uses(q, mod)) + " for q = " + std::to_string(q));
    std::vector<std::int8_t> out;
    out.reserve(q);
    for (const auto& b : blocks) {
        for (const auto& y : b.values) {
            out.push_back(sign_of(y.real()));
            if (mod == Modulation::qam4 && out.size() < q) out.push_back(sign_of(y.imag()));
        }
    }
    return SignVector(std::move(out));
}

GradientVector analog_superpose(std::span<const GradientVector> gradients,
                                std::span<const ChannelRealization> channels, const PowerPolicy& policy,
                                double sigma_z, rng::Stream& noise) {
    require(!gradients.empty(), ErrorKind::dimension, "no devices to aggregate");
    const std::size_t K = gradients.size();
    const std::size_t q = gradients.front().size();
    require(channels.size() == ofdm_symbols(q, policy.M), ErrorKind::framing,
            "need one channel realization per OFDM symbol");

    double scale = 0.0;
    for (const auto& g : gradients) {
        require(g.size() == q, ErrorKind::dimension, "gradients differ in length");
        double power = 0.0;
        for (double v : g.values()) power += v * v;
        scale = std::max(scale, std::sqrt(power / static_cast<double>(q)));
    }
    if (scale == 0.0) scale = 1.0;

    std::vector<std::complex<double>> tx(K * q);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < q; ++i) tx[k * q + i] = {gradients[k][i] / scale, 0.0};
    const TxFrame frame{K, q, std::move(tx)};

    const double decode = scale / (static_cast<double>(K) * std::sqrt(policy.rho0));
    std::vector<double> out;
    out.reserve(q);
    for (std::size_t t = 0; t < channels.size(); ++t) {
        const auto block = air_superpose(frame, t * policy.M, channels[t], policy, sigma_z, noise);
        for (const auto& y : block.values) out.push_back(y.real() * decode);
    }
    return GradientVector(std::move(out));
}

} // namespace obda
