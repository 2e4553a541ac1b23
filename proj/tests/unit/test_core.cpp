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
#include <limits>
#include <vector>

#include "obda/core.hpp"
#include "obda/error.hpp"
#include "obda/rng.hpp"

using namespace obda;

namespace {

SignVector signs(std::initializer_list<int> v) {
    std::vector<std::int8_t> out;
    for (int x : v) out.push_back(static_cast<std::int8_t>(x));
    return SignVector(out);
}

SignVector random_signs(rng::Stream& s, std::size_t q) {
    std::vector<std::int8_t> out(q);
    for (auto& v : out) v = s.uniform() < 0.5 ? -1 : 1;
    return SignVector(out);
}

} // namespace

TEST_CASE("sign_quantize") {
    CHECK(sign_quantize(GradientVector({-0.3, 0.0, 2.1})) == signs({-1, 1, 1}));
    CHECK(sign_quantize(GradientVector({5.0})) == signs({1}));
    CHECK(sign_quantize(GradientVector({-0.0})) == signs({1}));

    rng::Stream s(1, rng::Purpose::test);
    std::vector<double> g(50);
    for (auto& v : g) v = s.normal();
    const auto once = sign_quantize(GradientVector(g));
    std::vector<double> as_real;
    for (auto v : once.signs()) as_real.push_back(v);
    CHECK(sign_quantize(GradientVector(as_real)) == once);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const std::vector<double> bad{1.0, nan};
    CHECK_THROWS_AS(sign_quantize(std::span<const double>(bad)), Error);
    CHECK_THROWS_AS(GradientVector({std::numeric_limits<double>::infinity()}), Error);
    CHECK_THROWS_AS(SignVector({0}), Error);
}

TEST_CASE("qam_encode examples") {
    const double r = std::sqrt(0.5);
    const auto a = qam_encode(signs({1, -1}));
    REQUIRE(a.symbols.size() == 1);
    CHECK(a.symbols[0] == std::complex<double>(r, -r));
    CHECK_FALSE(a.padded);

    const auto b = qam_encode(signs({1, 1, -1}));
    REQUIRE(b.symbols.size() == 2);
    CHECK(b.symbols[0] == std::complex<double>(r, r));
    CHECK(b.symbols[1] == std::complex<double>(-r, r));
    CHECK(b.padded);
    CHECK(b.sign_count() == 3);
    for (const auto& z : b.symbols) CHECK(std::norm(z) == doctest::Approx(1.0));
}

TEST_CASE("qam round trip over random sign vectors") {
    rng::Stream s(2, rng::Purpose::test);
    for (int t = 0; t < 1000; ++t) {
        const auto q = static_cast<std::size_t>(1 + s.below(64));
        const auto v = random_signs(s, q);
        REQUIRE(qam_decode(qam_encode(v)) == v);
    }
}

TEST_CASE("qam_decode rejects malformed blocks") {
    QamSymbolBlock empty_padded{{}, true};
    CHECK_THROWS_AS(qam_decode(empty_padded), Error);

    auto bad_pad = qam_encode(signs({1, 1, -1}));
    bad_pad.symbols[1] = {bad_pad.symbols[1].real(), -bad_pad.symbols[1].imag()};
    try {
        qam_decode(bad_pad);
        FAIL("expected a decode error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::decode);
    }

    QamSymbolBlock off_grid{{{0.3, 0.7}}, false};
    CHECK_THROWS_AS(qam_decode(off_grid), Error);
}

TEST_CASE("l1_norm") {
    CHECK(l1_norm(GradientVector({0, 0, 0})) == 0.0);
    CHECK(l1_norm(GradientVector({1, -2, 3})) == 6.0);

    rng::Stream s(3, rng::Purpose::test);
    std::vector<double> g(1000);
    for (auto& v : g) v = s.normal();
    long double oracle = 0;
    for (double v : g) oracle += std::fabs(static_cast<long double>(v));
    CHECK(l1_norm(GradientVector(g)) == doctest::Approx(static_cast<double>(oracle)).epsilon(1e-13));
    CHECK(l1_norm(GradientVector(g)) > 0.0);
}

TEST_CASE("channel uses and modulation") {
    CHECK(channel_uses(5, Modulation::bpsk) == 5);
    CHECK(channel_uses(5, Modulation::qam4) == 3);
    CHECK(channel_uses(6, Modulation::qam4) == 3);
    const auto bpsk = modulate(signs({1, -1, 1}), Modulation::bpsk);
    REQUIRE(bpsk.size() == 3);
    CHECK(bpsk[1] == std::complex<double>(-1.0, 0.0));
    CHECK(modulate(signs({1, -1, 1}), Modulation::qam4).size() == 2);
}
