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

#include "doctest.h"

#include <cmath>
#include <numbers>

#include "riscorr/channel.hpp"
#include "riscorr/phases.hpp"
#include "riscorr/stats.hpp"

using namespace riscorr;

namespace {

SystemParams small_params(int side, int antennas, double kappa) {
    SystemParams params;
    params.geometry.n1 = side;
    params.geometry.n2 = side;
    params.geometry.m = antennas;
    params.kappa = kappa;
    return params;
}

}  // namespace

TEST_CASE("sample_bs_ris: composite collapses to the right part at extreme kappa") {
    // LoS-only limit
    SystemParams los_only = small_params(3, 2, 1e12);
    RandomStream s1(100);
    const BsRisChannel strong = sample_bs_ris(los_only, s1);
    const ComplexMatrix strong_composite = strong.composite();
    for (int r = 0; r < strong_composite.rows(); ++r)
        for (int c = 0; c < strong_composite.cols(); ++c) {
            const double scale = std::abs(strong.g_los(r, c));
            CHECK(std::abs(strong_composite(r, c) - strong.g_los(r, c)) < 1e-5 * scale);
        }

    // Rayleigh limit: weights are exactly 0 and 1
    SystemParams rayleigh = small_params(3, 2, 0.0);
    RandomStream s2(101);
    const BsRisChannel weak = sample_bs_ris(rayleigh, s2);
    const ComplexMatrix weak_composite = weak.composite();
    for (int r = 0; r < weak_composite.rows(); ++r)
        for (int c = 0; c < weak_composite.cols(); ++c)
            CHECK(weak_composite(r, c) == weak.g_nlos(r, c));
}

TEST_CASE("sample_bs_ris: LoS matrix is rank one with unit Frobenius norm") {
    SystemParams params = small_params(4, 3, 5.0);
    RandomStream stream(102);
    const BsRisChannel g = sample_bs_ris(params, stream);
    CHECK(std::abs(frobenius_norm_sq(g.g_los) - 1.0) < 1e-12);
    // every 2x2 minor vanishes
    for (int r = 1; r < g.g_los.rows(); ++r)
        for (int c = 1; c < g.g_los.cols(); ++c) {
            const Complex minor =
                g.g_los(0, 0) * g.g_los(r, c) - g.g_los(0, c) * g.g_los(r, 0);
            CHECK(std::abs(minor) < 1e-14);
        }
}

TEST_CASE("sample_bs_ris: mean Frobenius power matches the Rician split") {
    // kappa/(kappa+1) * 1 + 1/(kappa+1) * N*M = 5/6 + 32/6 at kappa=5, N=16, M=2
    SystemParams params = small_params(4, 2, 5.0);
    RandomStream stream(103);
    StatAccumulator acc;
    for (int i = 0; i < 10'000; ++i) {
        const BsRisChannel g = sample_bs_ris(params, stream);
        acc.add(frobenius_norm_sq(g.composite()));
    }
    CHECK(std::abs(acc.mean() - 37.0 / 6.0) < 3.0 * acc.std_error());
}

TEST_CASE("sample_bs_ris: scattered entries are unit power and independent across elements") {
    SystemParams params = small_params(3, 2, 5.0);
    RandomStream stream(104);
    ComplexAccumulator same, different;
    StatAccumulator power;
    for (int i = 0; i < 10'000; ++i) {
        const BsRisChannel g = sample_bs_ris(params, stream);
        power.add(std::norm(g.g_nlos(2, 1)));
        same.add(g.g_nlos(2, 1) * std::conj(g.g_nlos(2, 1)));
        different.add(g.g_nlos(2, 1) * std::conj(g.g_nlos(5, 1)));
    }
    CHECK(std::abs(power.mean() - 1.0) < 3.0 * power.std_error());
    CHECK(std::abs(same.mean() - Complex{1.0, 0.0}) < 3.0 * same.se_magnitude());
    CHECK(std::abs(different.mean()) < 3.0 * different.se_magnitude());
}

TEST_CASE("make_ris_ue: single zero-frequency path") {
    const int n1 = 4, n2 = 4;
    const RisUeChannel h = make_ris_ue({Complex{1.0, 0.0}}, {SpatialFrequency{0.0, 0.0}},
                                       n1, n2);
    for (const Complex& z : h.vector)
        CHECK(std::abs(z - Complex{0.25, 0.0}) < 1e-15);
}

TEST_CASE("sample_ris_ue: mean power equals the path count") {
    SystemParams params = small_params(4, 2, 5.0);
    RandomStream stream(105);
    StatAccumulator acc;
    for (int i = 0; i < 10'000; ++i) {
        const RisUeChannel h = sample_ris_ue(params, 3, stream);
        acc.add(squared_norm(h.vector));
    }
    CHECK(std::abs(acc.mean() - 3.0) < 3.0 * acc.std_error());
}

TEST_CASE("sample_ris_ue: two users from distinct streams are uncorrelated") {
    SystemParams params = small_params(4, 2, 5.0);
    RandomStream sk(106, 0), sl(106, 1);
    ComplexAccumulator acc;
    for (int i = 0; i < 10'000; ++i) {
        const RisUeChannel hk = sample_ris_ue(params, 3, sk);
        const RisUeChannel hl = sample_ris_ue(params, 3, sl);
        acc.add(inner_product(hk.vector, hl.vector));
    }
    CHECK(std::abs(acc.mean()) < 3.0 * acc.se_magnitude());
}

TEST_CASE("cascade: scalar chain at N=1, M=1") {
    SystemParams params = small_params(1, 1, 5.0);
    RandomStream stream(107);
    const BsRisChannel g = sample_bs_ris(params, stream);
    const RisUeChannel h = sample_ris_ue(params, 1, stream);
    const PhaseVector p = equal_phase(1, 0.7);

    const CascadeChannel chain = cascade(h, p, g);
    const double w_los = std::sqrt(5.0 / 6.0);
    const double w_nlos = std::sqrt(1.0 / 6.0);
    const Complex expected =
        p.vector()[0] * h.vector[0] * (w_los * g.g_los(0, 0) + w_nlos * g.g_nlos(0, 0));
    CHECK(std::abs(chain.full[0] - expected) < 1e-14);
}

TEST_CASE("cascade: equals the literal diag-matrix product on random instances") {
    RandomStream stream(108);
    for (int trial = 0; trial < 100; ++trial) {
        SystemParams params = small_params(3, 2, 2.5);
        const BsRisChannel g = sample_bs_ris(params, stream);
        const RisUeChannel h = sample_ris_ue(params, 2, stream);
        const PhaseVector p = random_phase(params.geometry.ris_elements(), stream);

        const CascadeChannel fast = cascade(h, p, g);

        // literal route: h Theta G with Theta = diag(p) and composite G
        const int n = params.geometry.ris_elements();
        const int m = params.geometry.m;
        const ComplexMatrix composite = g.composite();
        ComplexVector literal(static_cast<std::size_t>(m), Complex{0.0, 0.0});
        for (int c = 0; c < m; ++c)
            for (int r = 0; r < n; ++r)
                literal[c] += h.vector[r] * p.vector()[r] * composite(r, c);

        for (int c = 0; c < m; ++c) {
            CHECK(std::abs(fast.full[c] - literal[c]) < 1e-12);
            CHECK(std::abs(fast.full[c] - (fast.los_part[c] + fast.nlos_part[c])) < 1e-12);
        }
    }
}

TEST_CASE("cascade: LoS part matches the per-path steering sum") {
    // (1/N) sqrt(kappa/(kappa+1)) sum_p gain_p (p^T b(aoa - freq_p)) conj(a)
    RandomStream stream(109);
    SystemParams params = small_params(4, 3, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        const BsRisChannel g = sample_bs_ris(params, stream);
        const RisUeChannel h = sample_ris_ue(params, 3, stream);
        const PhaseVector p = random_phase(params.geometry.ris_elements(), stream);
        const CascadeChannel chain = cascade(h, p, g);

        const int n = params.geometry.ris_elements();
        const double scale = std::sqrt(params.kappa / (params.kappa + 1.0)) / n;
        Complex coefficient{0.0, 0.0};
        for (std::size_t path = 0; path < h.gains.size(); ++path) {
            const SpatialFrequency delta{g.aoa.phi - h.freqs[path].phi,
                                         g.aoa.vartheta - h.freqs[path].vartheta};
            const ComplexVector b = upa_phase_profile(delta, params.geometry.n1,
                                                      params.geometry.n2);
            Complex dot{0.0, 0.0};
            for (int e = 0; e < n; ++e)
                dot += p.vector()[e] * b[e];
            coefficient += h.gains[path] * dot;
        }
        const ComplexVector depart = ula_steering(g.aod_freq, params.geometry.m);
        for (int c = 0; c < params.geometry.m; ++c) {
            const Complex expected = scale * coefficient * std::conj(depart[c]);
            CHECK(std::abs(chain.los_part[c] - expected) < 1e-10);
        }
    }
}

TEST_CASE("cascade: LoS power matches the closed form; cross term has zero mean") {
    SystemParams params = small_params(4, 2, 5.0);
    RandomStream stream(110);
    const PhaseVector p = equal_phase(params.geometry.ris_elements(),
                                      std::numbers::pi / 6.0);
    StatAccumulator los_power;
    ComplexAccumulator cross;
    for (int i = 0; i < 100'000; ++i) {
        const BsRisChannel g = sample_bs_ris(params, stream);
        const RisUeChannel h = sample_ris_ue(params, 3, stream);
        const CascadeChannel chain = cascade(h, p, g);
        los_power.add(squared_norm(chain.los_part));
        cross.add(inner_product(chain.los_part, chain.nlos_part));
    }
    // (L/N) kappa/(kappa+1) = (3/16)(5/6)
    CHECK(std::abs(los_power.mean() - 0.15625) < 3.0 * los_power.std_error());
    CHECK(std::abs(cross.mean()) < 3.0 * cross.se_magnitude());
}

TEST_CASE("cascade: dimension mismatches are rejected") {
    SystemParams params = small_params(3, 2, 1.0);
    RandomStream stream(111);
    const BsRisChannel g = sample_bs_ris(params, stream);
    const RisUeChannel h = sample_ris_ue(params, 2, stream);
    const PhaseVector wrong_p = equal_phase(4, 0.0);
    CHECK_THROWS_AS((void)cascade(h, wrong_p, g), std::invalid_argument);

    const RisUeChannel short_h = make_ris_ue({Complex{1.0, 0.0}}, {SpatialFrequency{}}, 2, 2);
    const PhaseVector p = equal_phase(params.geometry.ris_elements(), 0.0);
    CHECK_THROWS_AS((void)cascade(short_h, p, g), std::invalid_argument);
}
