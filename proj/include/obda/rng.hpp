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

// Counter-based random streams.
//
// Every random quantity in the simulator is drawn from a Stream addressed by
// (master seed, purpose, a, b, c).  The Philox-4x32-10 block cipher maps that
// address plus a running block index to 128 random bits, so any stream can be
// materialised independently on any thread and the output of a run depends
// only on the configuration, never on scheduling.

#include <array>
#include <complex>
#include <cstdint>

namespace obda::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

/// Philox-4x32 with 10 rounds (Salmon et al., SC'11).
Counter philox4x32(Counter ctr, Key key) noexcept;

enum class Purpose : std::uint32_t {
    batch = 1,
    channel = 2,
    csi = 3,
    noise = 4,
    verify = 5,
    split = 6,
    dataset = 7,
    landscape = 8,
    power = 9,
    test = 10,
};

class Stream {
public:
    Stream(std::uint64_t seed, Purpose purpose, std::uint32_t a = 0,
           std::uint32_t b = 0, std::uint32_t c = 0) noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Uniform on (0, 1]; safe as a log argument.
    double uniform_open() noexcept { return 1.0 - uniform(); }

    /// Standard normal via Box-Muller; the second variate is cached.
    double normal() noexcept;

    /// Circularly symmetric complex Gaussian CN(0, 1).
    std::complex<double> complex_normal() noexcept;

    /// Uniform integer in [0, n).  n must be positive.
    std::uint64_t below(std::uint64_t n) noexcept;

private:
    void refill() noexcept;

    Key key_;
    Counter base_;
    std::uint32_t block_ = 0;
    Counter buffer_{};
    int used_ = 4;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace obda::rng
