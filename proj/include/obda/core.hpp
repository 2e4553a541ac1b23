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
#include <vector>

namespace obda {

/// Real-valued q-dimensional vector; every entry is finite.
class GradientVector {
public:
    GradientVector() = default;
    explicit GradientVector(std::vector<double> values);

    static GradientVector zeros(std::size_t q) { return GradientVector(std::vector<double>(q, 0.0)); }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

    bool operator==(const GradientVector&) const = default;

private:
    std::vector<double> values_;
};

/// Vector of +1/-1 entries.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<std::int8_t> signs);

    std::size_t size() const noexcept { return signs_.size(); }
    int operator[](std::size_t i) const noexcept { return signs_[i]; }
    std::span<const std::int8_t> signs() const noexcept { return signs_; }

    bool operator==(const SignVector&) const = default;

private:
    std::vector<std::int8_t> signs_;
};

/// 4-QAM symbols carrying two signs each: sign 2j on the real axis and
/// sign 2j+1 on the imaginary axis (0-based), both scaled by 1/sqrt(2).
/// An odd-length source is completed with a +1 in the last imaginary slot and
/// `padded` is set.
struct QamSymbolBlock {
    std::vector<std::complex<double>> symbols;
    bool padded = false;

    std::size_t sign_count() const noexcept { return 2 * symbols.size() - (padded ? 1 : 0); }
};

enum class Modulation { bpsk, qam4 };

inline constexpr double kQamScale = 0.70710678118654752440; // 1/sqrt(2)

/// sign(x) with sign(0) = +1.
constexpr std::int8_t sign_of(double x) noexcept { return x < 0.0 ? std::int8_t{-1} : std::int8_t{1}; }

SignVector sign_quantize(const GradientVector& g);
/// Validating overload for raw buffers: throws invalid_input on NaN/inf.
SignVector sign_quantize(std::span<const double> g);

QamSymbolBlock qam_encode(const SignVector& s);
SignVector qam_decode(const QamSymbolBlock& block);

double l1_norm(std::span<const double> g) noexcept;
inline double l1_norm(const GradientVector& g) noexcept { return l1_norm(g.values()); }

/// Number of channel uses needed for q signs under the given modulation.
std::size_t channel_uses(std::size_t q, Modulation mod) noexcept;

/// Channel-use symbols for one device: +/-1 for BPSK, qam_encode for 4-QAM.
std::vector<std::complex<double>> modulate(const SignVector& s, Modulation mod);

} // namespace obda
