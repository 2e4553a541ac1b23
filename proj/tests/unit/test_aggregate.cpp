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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "obda/aggregate.hpp"
#include "obda/error.hpp"
#include "oracles.hpp"

using namespace obda;

namespace {

SignVector random_signs(std::size_t q, rng::Stream& s, double flip = 0.5) {
    std::vector<std::int8_t> v(q);
    for (auto& x : v) x = s.uniform() < flip ? -1 : 1;
    return SignVector(std::move(v));
}

// Full transmit-and-decode chain for one round.
SignVector transmit(std::span<const SignVector> signs, Modulation mod, const PowerPolicy& policy,
                    const CsiErrorModel& csi, double sigma_z, std::uint64_t seed, std::uint32_t round,
                    Exec exec = Exec::parallel) {
    const auto frame = build_tx_frame(signs, mod);
    std::vector<AggregatedBlock> blocks;
    for (std::size_t t = 0; t < ofdm_symbols(frame.L, policy.M); ++t) {
        const std::size_t width = symbol_width(frame.L, policy.M, t);
        const auto ch = sample_channel(frame.K, width, policy, csi,
                                       SymbolKey{seed, round, static_cast<std::uint32_t>(t)}, exec);
        rng::Stream noise(seed, rng::Purpose::noise, round, static_cast<std::uint32_t>(t));
        blocks.push_back(air_superpose(frame, t * policy.M, ch, policy, sigma_z, noise, exec));
    }
    return majority_vote(blocks, signs.front().size(), mod);
}

} // namespace

TEST_CASE("awgn superposition of three signs") {
    const auto policy = derive_policy(4.0, 1, 0.0, ChannelMode::awgn);
    REQUIRE(policy.rho0 == 4.0);
    const std::vector<SignVector> s{SignVector({1}), SignVector({1}), SignVector({-1})};
    const auto ch = sample_channel(3, 1, policy, CsiErrorModel{}, SymbolKey{});

    rng::Stream quiet(1, rng::Purpose::noise);
    const auto clean = air_superpose(s, ch, policy, 0.0, quiet);
    CHECK(clean.values[0] == std::complex<double>(2.0, 0.0));
    CHECK(clean.values[0].real() + 0.1 == doctest::Approx(2.1));
    CHECK(clean.contributing_counts[0] == 3);

    rng::Stream noise(2, rng::Purpose::noise);
    rng::Stream replay(2, rng::Purpose::noise);
    const double z = 0.3 / std::sqrt(2.0) * replay.normal();
    const auto noisy = air_superpose(s, ch, policy, 0.3, noise);
    CHECK(noisy.values[0].real() == doctest::Approx(2.0 + z).epsilon(1e-15));
}

TEST_CASE("all devices truncated leaves only noise") {
    const auto policy = derive_policy(1.0, 2, 1.0, ChannelMode::fading_perfect_csi);
    ChannelRealization ch;
    ch.K = 4;
    ch.width = 2;
    ch.h.assign(8, {0.3, 0.4}); // |h|^2 = 0.25 < g_th
    ch.h_hat = ch.h;
    const std::vector<SignVector> s(4, SignVector({1, -1}));
    rng::Stream noise(3, rng::Purpose::noise);
    rng::Stream replay(3, rng::Purpose::noise);
    const auto out = air_superpose(s, ch, policy, 1.0, noise);
    for (std::size_t m = 0; m < 2; ++m) {
        const double re = replay.normal() / std::sqrt(2.0);
        const double im = replay.normal() / std::sqrt(2.0);
        CHECK(out.values[m] == std::complex<double>(re, im));
        CHECK(out.contributing_counts[m] == 0);
    }
}

TEST_CASE("contributing counts follow Binomial(K, alpha)") {
    const int K = 20;
    const auto policy = derive_policy(1.0, 1000, 0.5, ChannelMode::fading_perfect_csi);
    std::vector<SignVector> s(K, SignVector(std::vector<std::int8_t>(1000, 1)));
    std::vector<double> counts;
    for (std::uint32_t t = 0; t < 100; ++t) {
        const auto ch = sample_channel(K, 1000, policy, CsiErrorModel{}, SymbolKey{21, 0, t});
        rng::Stream noise(21, rng::Purpose::noise, 0, t);
        const auto out = air_superpose(s, ch, policy, 0.0, noise);
        for (int c : out.contributing_counts) {
            CHECK(c >= 0);
            CHECK(c <= K);
            counts.push_back(c);
        }
    }
    REQUIRE(counts.size() == 100000);
    const auto cdf = oracle::binomial_cdf(K, policy.alpha);
    std::vector<double> hist(K + 1, 0.0);
    for (double c : counts) hist[static_cast<std::size_t>(c)] += 1.0;
    double acc = 0.0, worst = 0.0;
    for (int k = 0; k <= K; ++k) {
        acc += hist[k] / counts.size();
        worst = std::max(worst, std::abs(acc - cdf[k]));
    }
    CHECK(worst < oracle::ks_critical_01(counts.size()));
}

TEST_CASE("majority_vote decisions") {
    AggregatedBlock b;
    b.values = {{2.1, 0.0}, {-0.4, 0.0}};
    const std::vector<AggregatedBlock> blocks{b};
    CHECK(majority_vote(blocks, 2, Modulation::bpsk) == SignVector({1, -1}));

    AggregatedBlock zero;
    zero.values = {{0.0, 0.0}};
    CHECK(majority_vote(std::vector<AggregatedBlock>{zero}, 1, Modulation::bpsk) == SignVector({1}));

    AggregatedBlock qam;
    qam.values = {{-1.0, 2.0}, {3.0, -0.5}};
    CHECK(majority_vote(std::vector<AggregatedBlock>{qam}, 4, Modulation::qam4) == SignVector({-1, 1, 1, -1}));
    CHECK(majority_vote(std::vector<AggregatedBlock>{qam}, 3, Modulation::qam4) == SignVector({-1, 1, 1}));
}

TEST_CASE("majority_vote rejects wrong cascade length") {
    AggregatedBlock b;
    b.values.resize(3);
    const std::vector<AggregatedBlock> blocks{b};
    for (std::size_t q : {2u, 4u}) {
        try {
            majority_vote(blocks, q, Modulation::bpsk);
            FAIL("expected framing error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::framing);
        }
    }
    CHECK_THROWS_AS(majority_vote(blocks, 7, Modulation::qam4), Error);
    CHECK_NOTHROW(majority_vote(blocks, 5, Modulation::qam4));
}

TEST_CASE("device count mismatch is a dimension error") {
    const auto policy = derive_policy(1.0, 4, 0.0, ChannelMode::awgn);
    const auto ch = sample_channel(3, 4, policy, CsiErrorModel{}, SymbolKey{});
    const std::vector<SignVector> s(2, SignVector({1, 1, 1, 1}));
    rng::Stream noise(1, rng::Purpose::noise);
    try {
        air_superpose(s, ch, policy, 0.0, noise);
        FAIL("expected dimension error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::dimension);
    }
    const std::vector<SignVector> ragged{SignVector({1}), SignVector({1, -1})};
    CHECK_THROWS_AS(build_tx_frame(ragged, Modulation::bpsk), Error);
}

TEST_CASE("noiseless awgn with odd K is the exact majority") {
    rng::Stream s(5, rng::Purpose::test);
    const auto policy = derive_policy(1.0, 100, 0.0, ChannelMode::awgn);
    for (int K : {1, 3, 7, 51}) {
        for (auto mod : {Modulation::bpsk, Modulation::qam4}) {
            std::vector<SignVector> signs;
            for (int k = 0; k < K; ++k) signs.push_back(random_signs(333, s));
            const auto v = transmit(signs, mod, policy, CsiErrorModel{}, 0.0, 9, 0);
            for (std::size_t i = 0; i < 333; ++i) {
                int sum = 0;
                for (const auto& sk : signs) sum += sk[i];
                CHECK(v[i] == (sum > 0 ? 1 : -1));
            }
        }
    }
}

TEST_CASE("noiseless even K ties decode to +1") {
    const auto policy = derive_policy(1.0, 8, 0.0, ChannelMode::awgn);
    const std::vector<SignVector> s{SignVector({1, -1, 1}), SignVector({-1, 1, 1})};
    CHECK(transmit(s, Modulation::bpsk, policy, CsiErrorModel{}, 0.0, 1, 0) == SignVector({1, 1, 1}));
}

TEST_CASE("framing is the identity on parameter indices") {
    rng::Stream s(6, rng::Purpose::test);
    CHECK(ofdm_symbols(2500, 1000) == 3);
    CHECK(symbol_width(2500, 1000, 0) == 1000);
    CHECK(symbol_width(2500, 1000, 2) == 500);
    CHECK(symbol_width(2500, 1000, 3) == 0);
    const auto policy = derive_policy(1.0, 1000, 0.0, ChannelMode::awgn);
    for (std::size_t q : {1u, 999u, 1000u, 2500u, 2501u}) {
        for (auto mod : {Modulation::bpsk, Modulation::qam4}) {
            const std::vector<SignVector> one{random_signs(q, s)};
            const auto frame = build_tx_frame(one, mod);
            CHECK(frame.L == channel_uses(q, mod));
            std::size_t carried = 0;
            for (std::size_t t = 0; t < ofdm_symbols(frame.L, 1000); ++t) carried += symbol_width(frame.L, 1000, t);
            CHECK(carried == frame.L);
            CHECK(transmit(one, mod, policy, CsiErrorModel{}, 0.0, 2, 0) == one.front());
        }
    }
}

TEST_CASE("4-QAM axes behave like BPSK at the same per-axis SNR") {
    const std::size_t K = 5, q = 2000;
    const auto policy = derive_policy(1.0, 1000, 0.0, ChannelMode::awgn);
    const double flip = 0.35, sigma = 1.2 * std::sqrt(policy.rho0);
    rng::Stream s(7, rng::Purpose::test);
    double err_re = 0, err_im = 0, err_bpsk = 0;
    const int rounds = 100;
    for (int r = 0; r < rounds; ++r) {
        std::vector<SignVector> signs;
        for (std::size_t k = 0; k < K; ++k) signs.push_back(random_signs(q, s, flip));
        const auto qam = transmit(signs, Modulation::qam4, policy, CsiErrorModel{}, sigma, 8,
                                  static_cast<std::uint32_t>(r));
        // Each 4-QAM axis carries amplitude 1/sqrt(2): match it with sqrt(2) more noise.
        const auto bpsk = transmit(signs, Modulation::bpsk, policy, CsiErrorModel{}, sigma * std::sqrt(2.0), 9,
                                   static_cast<std::uint32_t>(r));
        for (std::size_t i = 0; i < q; ++i) {
            (i % 2 == 0 ? err_re : err_im) += qam[i] != 1;
            err_bpsk += bpsk[i] != 1;
        }
    }
    const double n_axis = rounds * q / 2.0;
    const double p_re = err_re / n_axis, p_im = err_im / n_axis, p_b = err_bpsk / (2.0 * n_axis);
    MESSAGE("error rates: qam re " << p_re << ", qam im " << p_im << ", bpsk " << p_b);
    CHECK(p_re > 0.05);
    CHECK(p_re < 0.45);
    const double band = 3.0 * std::sqrt(2.0 * p_b * (1 - p_b) / n_axis);
    CHECK(std::abs(p_re - p_im) <= band);
    CHECK(std::abs(p_re - p_b) <= band);
    CHECK(std::abs(p_im - p_b) <= band);
}

TEST_CASE("superposition: serial and parallel agree bit for bit") {
    set_threads(4);
    rng::Stream s(10, rng::Purpose::test);
    std::vector<SignVector> signs;
    for (int k = 0; k < 30; ++k) signs.push_back(random_signs(3001, s));
    const auto policy = derive_policy(1.0, 1000, 0.5, ChannelMode::fading_imperfect_csi);
    const CsiErrorModel csi{0.05};
    const auto frame = build_tx_frame(signs, Modulation::qam4);
    for (std::uint32_t t = 0; t < ofdm_symbols(frame.L, 1000); ++t) {
        const std::size_t width = symbol_width(frame.L, 1000, t);
        const auto ch = sample_channel(30, width, policy, csi, SymbolKey{3, 4, t}, Exec::serial);
        rng::Stream n1(3, rng::Purpose::noise, 4, t), n2(3, rng::Purpose::noise, 4, t);
        const auto a = air_superpose(frame, t * 1000, ch, policy, 0.7, n1, Exec::serial);
        const auto b = air_superpose(frame, t * 1000, ch, policy, 0.7, n2, Exec::parallel);
        CHECK(a.values == b.values);
        CHECK(a.contributing_counts == b.contributing_counts);
    }
    set_threads(0);
}

namespace {

std::vector<ChannelRealization> channels_for(std::size_t K, std::size_t q, const PowerPolicy& policy,
                                             std::uint64_t seed) {
    std::vector<ChannelRealization> out;
    for (std::uint32_t t = 0; t < ofdm_symbols(q, policy.M); ++t)
        out.push_back(sample_channel(K, symbol_width(q, policy.M, t), policy, CsiErrorModel{}, SymbolKey{seed, 0, t}));
    return out;
}

} // namespace

TEST_CASE("analog superposition recovers inputs without noise") {
    const auto policy = derive_policy(1.0, 16, 0.0, ChannelMode::awgn);
    const GradientVector g({0.5, -3.0, 2.0, 0.0, 1e-3, -7.5, 4.0, 0.25, 1.0, -1.0, 9.0, 0.1, -0.2, 0.3,
                            -0.4, 0.5, 6.0, -6.0, 2.5, 0.0});
    rng::Stream noise(1, rng::Purpose::noise);
    const std::vector<GradientVector> one{g};
    const auto ch1 = channels_for(1, g.size(), policy, 1);
    const auto out1 = analog_superpose(one, ch1, policy, 0.0, noise);
    REQUIRE(out1.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(out1[i] == doctest::Approx(g[i]).epsilon(1e-12));

    const std::vector<GradientVector> same(7, g);
    const auto ch7 = channels_for(7, g.size(), policy, 2);
    const auto out7 = analog_superpose(same, ch7, policy, 0.0, noise);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(out7[i] == doctest::Approx(g[i]).epsilon(1e-12));

    const auto wrong = channels_for(1, 40, policy, 3);
    CHECK_THROWS_AS(analog_superpose(one, wrong, policy, 0.0, noise), Error);
}

TEST_CASE("analog superposition: direct average plus noise of predicted variance") {
    const std::size_t K = 8, q = 500;
    const double sigma_z = 0.4;
    const auto policy = derive_policy(2.0, 250, 0.0, ChannelMode::awgn);
    rng::Stream s(11, rng::Purpose::test);
    std::vector<GradientVector> g;
    for (std::size_t k = 0; k < K; ++k) {
        std::vector<double> v(q);
        for (auto& x : v) x = s.normal() * (1.0 + 0.1 * static_cast<double>(k));
        g.emplace_back(std::move(v));
    }
    double c = 0.0;
    for (const auto& gk : g) {
        double p = 0.0;
        for (double x : gk.values()) p += x * x;
        c = std::max(c, std::sqrt(p / q));
    }
    const double predicted = c * c * sigma_z * sigma_z / (2.0 * K * K * policy.rho0);

    double sum = 0.0, sum2 = 0.0;
    std::size_t n = 0;
    for (std::uint32_t trial = 0; trial < 200; ++trial) {
        rng::Stream noise(12, rng::Purpose::noise, trial);
        const auto out = analog_superpose(g, channels_for(K, q, policy, trial), policy, sigma_z, noise);
        for (std::size_t i = 0; i < q; ++i) {
            double avg = 0.0;
            for (const auto& gk : g) avg += gk[i];
            const double e = out[i] - avg / K;
            sum += e;
            sum2 += e * e;
            ++n;
        }
    }
    const double var = sum2 / n;
    CHECK(std::abs(sum / n) <= 4.0 * std::sqrt(predicted / n));
    CHECK(std::abs(var / predicted - 1.0) <= 4.0 * std::sqrt(2.0 / n));
}
