// SPDX-License-Identifier: Apache-2.0
//
// riscorr — Monte Carlo simulation and closed-form analytics for the
// correlation between cascade channels sharing a common BS-RIS link
// Copyright (C) 2026 the riscorr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISCORR_RANDOM_HPP
#define RISCORR_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "riscorr/numerics.hpp"

namespace riscorr {

/// Deterministic splittable random stream.
///
/// A stream is identified by (master_seed, stream_index). Equal pairs
/// produce identical sequences; distinct indices produce statistically
/// independent substreams. Monte Carlo realization r draws everything from
/// substream r, so results do not depend on how realizations are scheduled
/// across threads.
///
/// The core is splitmix64: the state walks a Weyl sequence and every output
/// passes through a 64-bit avalanche finalizer. The substream start state is
/// derived by pushing both seed and index through the same finalizer.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t master_seed, std::uint64_t stream_index = 0)
        : state_(derive_state(master_seed, stream_index)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return finalize(state_);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive_state(std::uint64_t seed, std::uint64_t index) {
        return finalize(finalize(seed + 0x9E3779B97F4A7C15ULL) ^
                        finalize(index ^ 0xD1B54A32D192ED03ULL));
    }

    std::uint64_t state_;
};

/// Uniform draw in [lo, hi).
inline double sample_uniform(RandomStream& stream, double lo, double hi) {
    if (!(lo < hi))
        throw std::invalid_argument("sample_uniform: requires lo < hi");
    return lo + (hi - lo) * stream.next_double();
}

/// Circularly-symmetric complex Gaussian with unit total variance: the real
/// and imaginary parts are independent N(0, 1/2), so E[|z|^2] = 1.
///
/// Polar Box-Muller form: |z|^2 is Exp(1) and the phase is uniform. No
/// rejection loop, so the draw count per sample is fixed.
inline Complex sample_standard_complex_gaussian(RandomStream& stream) {
    const double u1 = 1.0 - stream.next_double();  // in (0, 1], keeps the log finite
    const double u2 = stream.next_double();
    const double radius = std::sqrt(-std::log(u1));
    return std::polar(radius, 2.0 * std::numbers::pi * u2);
}

}  // namespace riscorr

#endif  // RISCORR_RANDOM_HPP
