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

#ifndef RISCORR_PHASES_HPP
#define RISCORR_PHASES_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "riscorr/numerics.hpp"
#include "riscorr/random.hpp"

namespace riscorr {

/// Reflecting coefficient vector of the surface: one phase per element,
/// stored in [0, 2 pi), with the unit-modulus complex entries e^{j phi_n}
/// cached for the hot cascade path.
class PhaseVector {
public:
    explicit PhaseVector(std::vector<double> phases) : phases_(std::move(phases)) {
        if (phases_.empty())
            throw std::invalid_argument("PhaseVector: needs at least one element");
        entries_.resize(phases_.size());
        for (std::size_t n = 0; n < phases_.size(); ++n) {
            phases_[n] = wrap(phases_[n]);
            entries_[n] = std::polar(1.0, phases_[n]);
        }
    }

    int size() const noexcept { return static_cast<int>(phases_.size()); }
    const std::vector<double>& phases() const noexcept { return phases_; }
    const ComplexVector& vector() const noexcept { return entries_; }

private:
    static double wrap(double phi) {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        if (!std::isfinite(phi))
            throw std::invalid_argument("PhaseVector: non-finite phase");
        double w = std::fmod(phi, two_pi);
        if (w < 0.0)
            w += two_pi;
        if (w >= two_pi)  // a negative residue can round up to the period
            w = 0.0;
        return w;
    }

    std::vector<double> phases_;
    ComplexVector entries_;
};

/// All elements share one phase value.
inline PhaseVector equal_phase(int n, double phi0) {
    if (n < 1)
        throw std::invalid_argument("equal_phase: element count must be positive");
    return PhaseVector(std::vector<double>(static_cast<std::size_t>(n), phi0));
}

/// Independent phases, uniform over [0, 2 pi).
inline PhaseVector random_phase(int n, RandomStream& stream) {
    if (n < 1)
        throw std::invalid_argument("random_phase: element count must be positive");
    std::vector<double> phases(static_cast<std::size_t>(n));
    for (double& phi : phases)
        phi = sample_uniform(stream, 0.0, 2.0 * std::numbers::pi);
    return PhaseVector(std::move(phases));
}

/// Hierarchical beam codebook over an n1 x n2 panel with power-of-two sides.
///
/// The bottom layer holds the exhaustive grid of N = n1*n2 separable beams:
/// codeword (i, j), flattened as i*n2 + j, applies the phase
/// 2 pi (a i / n1 + b j / n2) to element (a, b). Codeword (0, 0) is the
/// all-zero-phase beam. Layer k holds 2^k codewords for k = 1 .. log2(N);
/// each upper-layer codeword is represented by its left-most descendant in
/// the bottom layer, so only the bottom layer is materialized.
class Codebook {
public:
    Codebook(int n1, int n2, std::vector<PhaseVector> bottom,
             std::vector<std::pair<int, int>> layers)
        : n1_(n1), n2_(n2), bottom_(std::move(bottom)), layers_(std::move(layers)) {}

    int n1() const noexcept { return n1_; }
    int n2() const noexcept { return n2_; }
    int elements() const noexcept { return n1_ * n2_; }

    /// (layer_index, codeword_count) from the widest-beam layer down.
    const std::vector<std::pair<int, int>>& layer_structure() const noexcept {
        return layers_;
    }

    int bottom_size() const noexcept { return static_cast<int>(bottom_.size()); }
    const PhaseVector& bottom(int index) const { return bottom_.at(index); }

    const PhaseVector& codeword(int layer_index, int index) const {
        const int depth = layers_.back().first - layer_index;
        if (depth < 0)
            throw std::invalid_argument("Codebook: no such layer");
        const int count = count_of(layer_index);
        if (index < 0 || index >= count)
            throw std::invalid_argument("Codebook: codeword index out of range");
        return bottom_.at(static_cast<std::size_t>(index) << depth);
    }

private:
    int count_of(int layer_index) const {
        for (const auto& [layer, count] : layers_)
            if (layer == layer_index)
                return count;
        throw std::invalid_argument("Codebook: no such layer");
    }

    int n1_;
    int n2_;
    std::vector<PhaseVector> bottom_;
    std::vector<std::pair<int, int>> layers_;
};

namespace detail {

inline bool is_power_of_two(int n) {
    return n >= 1 && (n & (n - 1)) == 0;
}

inline int log2_exact(int n) {
    int k = 0;
    while ((1 << k) < n)
        ++k;
    return k;
}

}  // namespace detail

/// Builds the hierarchical beam codebook for an n1 x n2 panel. Both sides
/// must be powers of two. The degenerate single-element panel yields one
/// layer with a single all-zero codeword.
inline Codebook build_codebook(int n1, int n2) {
    if (!detail::is_power_of_two(n1) || !detail::is_power_of_two(n2))
        throw std::invalid_argument("build_codebook: panel sides must be powers of two");
    const int n = n1 * n2;
    constexpr double two_pi = 2.0 * std::numbers::pi;

    std::vector<PhaseVector> bottom;
    bottom.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            std::vector<double> phases(static_cast<std::size_t>(n));
            for (int a = 0; a < n1; ++a) {
                const double row_frac = static_cast<double>((a * i) % n1) / n1;
                for (int b = 0; b < n2; ++b) {
                    const double col_frac = static_cast<double>((b * j) % n2) / n2;
                    double frac = row_frac + col_frac;
                    if (frac >= 1.0)
                        frac -= 1.0;
                    phases[static_cast<std::size_t>(a) * n2 + b] = two_pi * frac;
                }
            }
            bottom.emplace_back(std::move(phases));
        }
    }

    std::vector<std::pair<int, int>> layers;
    const int depth = detail::log2_exact(n);
    if (depth == 0) {
        layers.emplace_back(0, 1);
    } else {
        for (int k = 1; k <= depth; ++k)
            layers.emplace_back(k, 1 << k);
    }
    return Codebook(n1, n2, std::move(bottom), std::move(layers));
}

}  // namespace riscorr

#endif  // RISCORR_PHASES_HPP
