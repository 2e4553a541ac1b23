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
#include <span>
#include <vector>

#include "obda/channel.hpp"
#include "obda/core.hpp"
#include "obda/parallel.hpp"
#include "obda/rng.hpp"

namespace obda {

/// Receiver output for one OFDM symbol.
struct AggregatedBlock {
    std::vector<std::complex<double>> values;
    std::vector<int> contributing_counts; // diagnostics only; the decoder ignores it
};

/// Channel-use symbols of all K devices for one round, row-major K x L.
struct TxFrame {
    std::size_t K = 0;
    std::size_t L = 0;
    std::vector<std::complex<double>> data;

    std::complex<double> at(std::size_t k, std::size_t j) const noexcept { return data[k * L + j]; }
};

TxFrame build_tx_frame(std::span<const SignVector> signs, Modulation mod);

/// Number of OFDM symbols N_s = ceil(L / M) needed for L channel uses.
std::size_t ofdm_symbols(std::size_t channel_uses, std::size_t M) noexcept;

/// Occupied sub-channels in OFDM symbol t (all M except possibly the last).
std::size_t symbol_width(std::size_t channel_uses, std::size_t M, std::size_t t) noexcept;

/// Superposition of one OFDM symbol: for sub-channel m,
///   y_m = sum_k h_km * p(h_hat_km) * x_k[offset + m] + z_m,  z_m ~ CN(0, sigma_z^2).
/// Noise is drawn sequentially from `noise`, then elements are combined in
/// parallel.
AggregatedBlock air_superpose(const TxFrame& frame, std::size_t offset, const ChannelRealization& channel,
                              const PowerPolicy& policy, double sigma_z, rng::Stream& noise,
                              Exec exec = Exec::parallel);

/// BPSK convenience: each SignVector is one device's block for this symbol.
AggregatedBlock air_superpose(std::span<const SignVector> blocks, const ChannelRealization& channel,
                              const PowerPolicy& policy, double sigma_z, rng::Stream& noise,
                              Exec exec = Exec::parallel);

/// Cascades the blocks and takes elementwise signs (ties to +1): the real
/// part under BPSK; real then imaginary part under 4-QAM with the pad slot
/// stripped.  Throws framing when the blocks do not carry exactly q signs.
SignVector majority_vote(std::span<const AggregatedBlock> blocks, std::size_t q, Modulation mod);

/// Unquantized over-the-air averaging baseline.  All devices scale by a common
/// factor c = max_k rms(g_k) (agreed over a lossless control channel) so the
/// transmit power is at most one per sub-channel; the server returns
/// Re(y) * c / (K sqrt(rho0)).  `channels[t]` covers OFDM symbol t.
GradientVector analog_superpose(std::span<const GradientVector> gradients,
                                std::span<const ChannelRealization> channels, const PowerPolicy& policy,
                                double sigma_z, rng::Stream& noise);

} // namespace obda
