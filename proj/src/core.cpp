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

#include "obda/core.hpp"

#include <cmath>
#include <string>

#include "obda/error.hpp"

namespace obda {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid input";
    case ErrorKind::config: return "configuration error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::decode: return "decode error";
    case ErrorKind::dimension: return "dimension error";
    case ErrorKind::framing: return "framing error";
    case ErrorKind::degenerate: return "degenerate landscape";
    case ErrorKind::vacuous_bound: return "vacuous bound";
    case ErrorKind::io: return "i/o error";
    }
    return "error";
}

GradientVector::GradientVector(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            fail(ErrorKind::invalid_input, "non-finite gradient entry at index " + std::to_string(i));
    }
}

SignVector::SignVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        if (signs_[i] != 1 && signs_[i] != -1)
            fail(ErrorKind::invalid_input, "sign entry at index " + std::to_string(i) + " is not +1/-1");
    }
}

SignVector sign_quantize(const GradientVector& g) {
    std::vector<std::int8_t> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = sign_of(g[i]);
    return SignVector(std::move(out));
}

SignVector sign_quantize(std::span<const double> g) {
    std::vector<std::int8_t> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!std::isfinite(g[i]))
            fail(ErrorKind::invalid_input, "cannot quantize non-finite entry at index " + std::to_string(i));
        out[i] = sign_of(g[i]);
    }
    return SignVector(std::move(out));
}

QamSymbolBlock qam_encode(const SignVector& s) {
    QamSymbolBlock block;
    const std::size_t n = s.size();
    block.padded = (n % 2) != 0;
    block.symbols.reserve((n + 1) / 2);
    for (std::size_t j = 0; 2 * j < n; ++j) {
        const int re = s[2 * j];
        const int im = 2 * j + 1 < n ? s[2 * j + 1] : 1;
        block.symbols.emplace_back(re * kQamScale, im * kQamScale);
    }
    return block;
}

SignVector qam_decode(const QamSymbolBlock& block) {
    if (block.padded && block.symbols.empty())
        fail(ErrorKind::decode, "pad flag set on an empty symbol block");
    constexpr double tol = 1e-12;
    std::vector<std::int8_t> out;
    out.reserve(2 * block.symbols.size());
    for (const auto& sym : block.symbols) {
        if (std::abs(std::abs(sym.real()) - kQamScale) > tol || std::abs(std::abs(sym.imag()) - kQamScale) > tol)
            fail(ErrorKind::decode, "symbol is not a unit-energy 4-QAM point");
        out.push_back(sign_of(sym.real()));
        out.push_back(sign_of(sym.imag()));
    }
    if (block.padded) {
        if (out.back() != 1) fail(ErrorKind::decode, "pad slot does not carry +1");
        out.pop_back();
    }
    return SignVector(std::move(out));
}

double l1_norm(std::span<const double> g) noexcept {
    double acc = 0.0;
    for (double x : g) acc += std::abs(x);
    return acc;
}

std::size_t channel_uses(std::size_t q, Modulation mod) noexcept {
    return mod == Modulation::bpsk ? q : (q + 1) / 2;
}

std::vector<std::complex<double>> modulate(const SignVector& s, Modulation mod) {
    if (mod == Modulation::qam4) return qam_encode(s).symbols;
    std::vector<std::complex<double>> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = {static_cast<double>(s[i]), 0.0};
    return out;
}

} // namespace obda
