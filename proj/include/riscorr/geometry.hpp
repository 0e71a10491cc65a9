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

#ifndef RISCORR_GEOMETRY_HPP
#define RISCORR_GEOMETRY_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "riscorr/numerics.hpp"

namespace riscorr {

/// Normalized spatial frequency pair of a plane wave at a planar array:
/// phi along the horizontal axis, vartheta along the vertical axis, both in
/// cycles per element, confined to (-d/lambda, d/lambda).
struct SpatialFrequency {
    double phi = 0.0;
    double vartheta = 0.0;
};

/// Array dimensions and element spacings of the deployment: an n1 x n2
/// reflecting panel and an m-antenna uniform linear array.
struct ArrayGeometry {
    int n1 = 20;
    int n2 = 20;
    int m = 2;
    double d_r_over_lambda = 0.5;
    double d_b_over_lambda = 0.5;

    int ris_elements() const noexcept { return n1 * n2; }

    void validate() const {
        if (n1 < 1 || n2 < 1)
            throw std::invalid_argument("ArrayGeometry: panel dimensions must be positive");
        if (m < 1)
            throw std::invalid_argument("ArrayGeometry: antenna count must be positive");
        if (!(d_r_over_lambda > 0.0) || !(d_b_over_lambda > 0.0))
            throw std::invalid_argument("ArrayGeometry: spacing ratios must be positive");
    }
};

/// Maps (azimuth, elevation) to normalized spatial frequencies:
/// phi = (d/lambda) cos(theta) sin(psi), vartheta = (d/lambda) sin(theta).
/// Angles are accepted only in the open interval (-pi/2, pi/2).
inline SpatialFrequency to_spatial_frequency(double psi, double theta, double d_over_lambda) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(std::abs(psi) < half_pi) || !(std::abs(theta) < half_pi))
        throw std::domain_error("to_spatial_frequency: angles must lie in (-pi/2, pi/2)");
    return {d_over_lambda * std::cos(theta) * std::sin(psi),
            d_over_lambda * std::sin(theta)};
}

/// Un-normalized planar-array phase profile. Entry at flat index
/// a*n2 + b equals e^{j 2 pi (a phi + b vartheta)}; the profile is the
/// Kronecker product of the two per-axis profiles and has squared norm n1*n2.
inline ComplexVector upa_phase_profile(const SpatialFrequency& sf, int n1, int n2) {
    if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("upa_phase_profile: dimensions must be positive");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    ComplexVector row(static_cast<std::size_t>(n1));
    ComplexVector col(static_cast<std::size_t>(n2));
    for (int a = 0; a < n1; ++a)
        row[a] = std::polar(1.0, two_pi * a * sf.phi);
    for (int b = 0; b < n2; ++b)
        col[b] = std::polar(1.0, two_pi * b * sf.vartheta);
    ComplexVector out(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            out[static_cast<std::size_t>(a) * n2 + b] = row[a] * col[b];
    return out;
}

/// Unit-norm planar-array steering vector: phase profile scaled by
/// 1/sqrt(n1*n2).
inline ComplexVector upa_steering(const SpatialFrequency& sf, int n1, int n2) {
    ComplexVector v = upa_phase_profile(sf, n1, n2);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n1) * n2);
    for (Complex& z : v)
        z *= scale;
    return v;
}

/// Unit-norm linear-array steering vector: entry k = e^{j 2 pi k phi} / sqrt(m).
inline ComplexVector ula_steering(double phi_aod, int m) {
    if (m < 1)
        throw std::invalid_argument("ula_steering: antenna count must be positive");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    ComplexVector v(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        v[k] = std::polar(scale, two_pi * k * phi_aod);
    return v;
}

}  // namespace riscorr

#endif  // RISCORR_GEOMETRY_HPP
