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

#ifndef RISCORR_EXPERIMENTS_HPP
#define RISCORR_EXPERIMENTS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "riscorr/analytics.hpp"
#include "riscorr/channel.hpp"
#include "riscorr/phases.hpp"
#include "riscorr/random.hpp"
#include "riscorr/stats.hpp"

namespace riscorr {

enum class PhaseMode { equal, random, codebook };

enum class SweepKind { none, over_n, over_m, over_kappa };

inline const char* phase_mode_name(PhaseMode mode) {
    switch (mode) {
        case PhaseMode::equal: return "equal";
        case PhaseMode::random: return "random";
        case PhaseMode::codebook: return "codebook";
    }
    return "?";
}

inline const char* sweep_kind_name(SweepKind kind) {
    switch (kind) {
        case SweepKind::none: return "none";
        case SweepKind::over_n: return "n";
        case SweepKind::over_m: return "m";
        case SweepKind::over_kappa: return "kappa";
    }
    return "?";
}

namespace detail {

inline int exact_square_side(double value) {
    if (!(value >= 1.0) || value != std::floor(value))
        return 0;
    const int side = static_cast<int>(std::llround(std::sqrt(value)));
    return (static_cast<double>(side) * side == value) ? side : 0;
}

}  // namespace detail

/// Everything needed to run one Monte Carlo point or a one-dimensional
/// sweep. Element-count sweeps keep the panel square, so those sweep values
/// must be perfect squares (sides additionally powers of two in codebook
/// mode).
struct ExperimentConfig {
    SystemParams params{};
    int realizations = 10000;
    PhaseMode phase_mode = PhaseMode::equal;
    double equal_phase_value = std::numbers::pi / 6.0;
    std::uint64_t master_seed = 42;
    SweepKind sweep = SweepKind::none;
    std::vector<double> sweep_values{};
    int threads = 0;  // 0 = hardware concurrency; never affects results
    std::string output_dir = ".";

    void validate() const {
        params.validate();
        if (realizations < 2)
            throw std::invalid_argument("config: realizations must be at least 2");
        if (!std::isfinite(equal_phase_value))
            throw std::invalid_argument("config: equal_phase_value must be finite");
        if (threads < 0)
            throw std::invalid_argument("config: threads must be >= 0");
        if (sweep == SweepKind::none) {
            if (!sweep_values.empty())
                throw std::invalid_argument("config: sweep_values requires a sweep");
            if (phase_mode == PhaseMode::codebook &&
                (!detail::is_power_of_two(params.geometry.n1) ||
                 !detail::is_power_of_two(params.geometry.n2)))
                throw std::invalid_argument(
                    "config: codebook phase_mode needs power-of-two n1 and n2");
            return;
        }
        if (sweep_values.empty())
            throw std::invalid_argument("config: sweep_values must not be empty");
        for (double v : sweep_values) {
            switch (sweep) {
                case SweepKind::over_n: {
                    const int side = detail::exact_square_side(v);
                    if (side == 0)
                        throw std::invalid_argument(
                            "config: sweep_values over n must be perfect squares, got " +
                            std::to_string(v));
                    if (phase_mode == PhaseMode::codebook && !detail::is_power_of_two(side))
                        throw std::invalid_argument(
                            "config: codebook phase_mode needs power-of-two panel sides, got n=" +
                            std::to_string(v));
                    break;
                }
                case SweepKind::over_m:
                    if (!(v >= 1.0) || v != std::floor(v))
                        throw std::invalid_argument(
                            "config: sweep_values over m must be positive integers");
                    break;
                case SweepKind::over_kappa:
                    if (!(v >= 0.0) || !std::isfinite(v))
                        throw std::invalid_argument(
                            "config: sweep_values over kappa must be >= 0");
                    break;
                case SweepKind::none:
                    break;
            }
        }
    }

    /// The point configuration for one sweep value.
    ExperimentConfig at_sweep_value(double value) const {
        ExperimentConfig point = *this;
        point.sweep = SweepKind::none;
        point.sweep_values.clear();
        switch (sweep) {
            case SweepKind::over_n: {
                const int side = detail::exact_square_side(value);
                point.params.geometry.n1 = side;
                point.params.geometry.n2 = side;
                break;
            }
            case SweepKind::over_m:
                point.params.geometry.m = static_cast<int>(value);
                break;
            case SweepKind::over_kappa:
                point.params.kappa = value;
                break;
            case SweepKind::none:
                throw std::logic_error("at_sweep_value: not a sweep");
        }
        return point;
    }
};

/// Streaming estimates collected over the realizations of one point. All
/// accumulators see exactly one sample per realization. The cross and pair
/// accumulators track the products whose means vanish in expectation; the
/// pair terms are one representative of each conjugate pair in the 16-term
/// expansion of |H_k . H_l^H|^2 (adding the conjugate doubles the real part
/// and cancels the imaginary part).
struct CorrelationStats {
    StatAccumulator rho;
    StatAccumulator rho_sq;
    StatAccumulator los_power;       // ||H_LOS||^2 of user k
    StatAccumulator nlos_power;      // ||H_NLOS||^2 of user k
    StatAccumulator loslos_power;    // |H_kLOS . H_lLOS^H|^2
    StatAccumulator losnlos_power;   // |H_kLOS . H_lNLOS^H|^2
    StatAccumulator nloslos_power;   // |H_kNLOS . H_lLOS^H|^2
    StatAccumulator nlosnlos_power;  // |H_kNLOS . H_lNLOS^H|^2
    ComplexAccumulator cross_los_nlos;  // H_kLOS . H_kNLOS^H
    std::array<ComplexAccumulator, 6> pair_terms;

    static constexpr std::array<const char*, 6> pair_names = {
        "losXlos_losXnlos",   // (AC^H)(CB^H)
        "losXlos_nlosXlos",   // (AC^H)(DA^H)
        "losXlos_nlosXnlos",  // (AC^H)(DB^H)
        "losXnlos_nlosXlos",  // (AD^H)(CB^H)
        "losXnlos_nlosXnlos", // (AD^H)(DB^H)
        "nlosXlos_nlosXnlos", // (BC^H)(DB^H)
    };
};

/// Correlation coefficient between two cascade channels:
/// |H_k . H_l^H| / (||H_k|| ||H_l||), in [0, 1] by Cauchy-Schwarz.
/// Length-one vectors are collinear by definition, so the single-antenna
/// case returns exactly 1.
inline double empirical_corr(const CascadeChannel& hk, const CascadeChannel& hl) {
    if (hk.full.size() != hl.full.size())
        throw std::invalid_argument("empirical_corr: dimension mismatch");
    const double nk = squared_norm(hk.full);
    const double nl = squared_norm(hl.full);
    if (nk == 0.0 || nl == 0.0)
        throw std::domain_error("empirical_corr: degenerate zero-norm channel");
    if (hk.full.size() == 1)
        return 1.0;
    const double rho = std::abs(inner_product(hk.full, hl.full)) / std::sqrt(nk * nl);
    return std::min(rho, 1.0);
}

namespace detail {

struct RealizationSample {
    double rho = 0.0;
    double rho_sq = 0.0;
    double los_power = 0.0;
    double nlos_power = 0.0;
    double loslos = 0.0;
    double losnlos = 0.0;
    double nloslos = 0.0;
    double nlosnlos = 0.0;
    Complex cross{};
    std::array<Complex, 6> pairs{};
};

inline RealizationSample simulate_one(const SystemParams& params, PhaseMode mode,
                                      const PhaseVector* shared_phase,
                                      RandomStream stream) {
    const BsRisChannel g = sample_bs_ris(params, stream);
    const RisUeChannel h_k = sample_ris_ue(params, params.paths_k, stream);
    const RisUeChannel h_l = sample_ris_ue(params, params.paths_l, stream);

    std::optional<PhaseVector> drawn;
    const PhaseVector* p = shared_phase;
    if (mode == PhaseMode::random) {
        drawn.emplace(random_phase(params.geometry.ris_elements(), stream));
        p = &*drawn;
    }

    const CascadeChannel ck = cascade(h_k, *p, g);
    const CascadeChannel cl = cascade(h_l, *p, g);

    const Complex s_ac = inner_product(ck.los_part, cl.los_part);
    const Complex s_ad = inner_product(ck.los_part, cl.nlos_part);
    const Complex s_bc = inner_product(ck.nlos_part, cl.los_part);
    const Complex s_bd = inner_product(ck.nlos_part, cl.nlos_part);

    RealizationSample out;
    out.rho = empirical_corr(ck, cl);
    out.rho_sq = out.rho * out.rho;
    out.los_power = squared_norm(ck.los_part);
    out.nlos_power = squared_norm(ck.nlos_part);
    out.loslos = std::norm(s_ac);
    out.losnlos = std::norm(s_ad);
    out.nloslos = std::norm(s_bc);
    out.nlosnlos = std::norm(s_bd);
    out.cross = inner_product(ck.los_part, ck.nlos_part);
    out.pairs = {s_ac * std::conj(s_bc), s_ac * std::conj(s_ad),
                 s_ac * std::conj(s_bd), s_ad * std::conj(s_bc),
                 s_ad * std::conj(s_bd), s_bc * std::conj(s_bd)};
    return out;
}

/// Runs the realizations of one point. Realization r draws from substream
/// stream_block | r; samples land in an index-addressed buffer filled by a
/// thread pool and are reduced sequentially in index order, so the result
/// is bit-identical for any thread count.
///
/// Codebook phases are committed once per point: a dedicated pilot draw
/// (substream stream_block | 0xFFFFFFFF, outside the realization range)
/// selects the codeword with the best summed cascade power, and that
/// configuration is held for every measured realization. Holding the
/// reflecting vector fixed keeps it independent of the measured ensemble,
/// which is what makes the correlation statistics configuration-invariant;
/// re-selecting against each measured draw would bias the estimate upward.
inline CorrelationStats run_block(const ExperimentConfig& config,
                                  std::uint64_t stream_block) {
    config.validate();
    if (config.sweep != SweepKind::none)
        throw std::invalid_argument("run_point: expected a point configuration");

    const int n = config.params.geometry.ris_elements();
    std::optional<PhaseVector> shared_phase;
    if (config.phase_mode == PhaseMode::equal) {
        shared_phase.emplace(equal_phase(n, config.equal_phase_value));
    } else if (config.phase_mode == PhaseMode::codebook) {
        const Codebook codebook = build_codebook(config.params.geometry.n1,
                                                 config.params.geometry.n2);
        RandomStream pilot(config.master_seed, stream_block | 0xFFFFFFFFULL);
        const BsRisChannel g = sample_bs_ris(config.params, pilot);
        const RisUeChannel h_k = sample_ris_ue(config.params, config.params.paths_k, pilot);
        const RisUeChannel h_l = sample_ris_ue(config.params, config.params.paths_l, pilot);
        shared_phase.emplace(codebook_select(codebook, g, h_k, h_l));
    }

    const std::size_t total = static_cast<std::size_t>(config.realizations);
    std::vector<RealizationSample> buffer(total);

    unsigned thread_count = config.threads > 0
                                ? static_cast<unsigned>(config.threads)
                                : std::max(1u, std::thread::hardware_concurrency());
    thread_count = std::min<unsigned>(thread_count, static_cast<unsigned>(total));

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r)
            buffer[r] = simulate_one(
                config.params, config.phase_mode,
                shared_phase ? &*shared_phase : nullptr,
                RandomStream(config.master_seed, stream_block | static_cast<std::uint64_t>(r)));
    };

    if (thread_count <= 1) {
        worker(0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count - 1);
        const std::size_t chunk = (total + thread_count - 1) / thread_count;
        for (unsigned t = 1; t < thread_count; ++t)
            pool.emplace_back(worker, std::min(total, t * chunk),
                              std::min(total, (t + 1) * chunk));
        worker(0, std::min(total, chunk));
        for (std::thread& th : pool)
            th.join();
    }

    CorrelationStats stats;
    for (const RealizationSample& s : buffer) {
        stats.rho.add(s.rho);
        stats.rho_sq.add(s.rho_sq);
        stats.los_power.add(s.los_power);
        stats.nlos_power.add(s.nlos_power);
        stats.loslos_power.add(s.loslos);
        stats.losnlos_power.add(s.losnlos);
        stats.nloslos_power.add(s.nloslos);
        stats.nlosnlos_power.add(s.nlosnlos);
        stats.cross_los_nlos.add(s.cross);
        for (std::size_t i = 0; i < s.pairs.size(); ++i)
            stats.pair_terms[i].add(s.pairs[i]);
    }
    return stats;
}

}  // namespace detail

/// Monte Carlo estimate at one parameter point.
inline CorrelationStats run_point(const ExperimentConfig& config) {
    return detail::run_block(config, 0);
}

/// One entry of a sweep: the resolved point configuration, its Monte Carlo
/// estimates, and the matching closed-form predictions.
struct SweepPoint {
    double sweep_value = 0.0;
    ExperimentConfig config{};
    CorrelationStats stats{};
    CorrelationPrediction prediction{};
};

/// Runs one point per sweep value. Sweep point i draws from the substream
/// family (i << 32) | r, so points are mutually independent and point 0
/// reproduces the standalone run with the same seed.
inline std::vector<SweepPoint> run_sweep(const ExperimentConfig& config) {
    config.validate();
    if (config.sweep == SweepKind::none)
        throw std::invalid_argument("run_sweep: expected a sweep configuration");
    std::vector<SweepPoint> out;
    out.reserve(config.sweep_values.size());
    for (std::size_t i = 0; i < config.sweep_values.size(); ++i) {
        SweepPoint point;
        point.sweep_value = config.sweep_values[i];
        point.config = config.at_sweep_value(point.sweep_value);
        point.stats = detail::run_block(point.config, static_cast<std::uint64_t>(i) << 32);
        point.prediction = predict_correlation(point.config.params.geometry.m,
                                               point.config.params.geometry.ris_elements(),
                                               point.config.params.kappa);
        out.push_back(std::move(point));
    }
    return out;
}

/// Simulated versus closed-form mean power of every tracked channel
/// component at one element-count sweep value, plus the worst zero-mean
/// diagnostic among the conjugate-pair terms.
struct ComponentRow {
    double ris_elements = 0.0;
    int bs_antennas = 0;
    double kappa = 0.0;
    int realizations = 0;
    double los_power_sim = 0.0, los_power_theory = 0.0;
    double nlos_power_sim = 0.0, nlos_power_theory = 0.0;
    double loslos_sim = 0.0, loslos_theory = 0.0;
    double losnlos_sim = 0.0, losnlos_theory = 0.0;
    double nloslos_sim = 0.0, nloslos_theory = 0.0;
    double nlosnlos_sim = 0.0, nlosnlos_theory = 0.0;
    double cross_abs_mean = 0.0, cross_se = 0.0;       // LoS/NLoS cross term, user k
    double max_pair_abs_mean = 0.0, max_pair_se = 0.0; // worst conjugate-pair sum
};

/// Component-power table over an element-count sweep.
inline std::vector<ComponentRow> component_power_report(const ExperimentConfig& config) {
    if (config.sweep != SweepKind::over_n)
        throw std::invalid_argument("component_power_report: requires a sweep over n");
    std::vector<ComponentRow> rows;
    for (const SweepPoint& point : run_sweep(config)) {
        const SystemParams& params = point.config.params;
        const ComponentPowers theory =
            component_powers(params.paths_k, params.paths_l,
                             params.geometry.ris_elements(), params.geometry.m,
                             params.kappa);
        ComponentRow row;
        row.ris_elements = point.sweep_value;
        row.bs_antennas = params.geometry.m;
        row.kappa = params.kappa;
        row.realizations = point.config.realizations;
        row.los_power_sim = point.stats.los_power.mean();
        row.los_power_theory = theory.los_power;
        row.nlos_power_sim = point.stats.nlos_power.mean();
        row.nlos_power_theory = theory.nlos_power;
        row.loslos_sim = point.stats.loslos_power.mean();
        row.loslos_theory = theory.loslos_inner;
        row.losnlos_sim = point.stats.losnlos_power.mean();
        row.losnlos_theory = theory.losnlos_inner;
        row.nloslos_sim = point.stats.nloslos_power.mean();
        row.nloslos_theory = theory.losnlos_inner;  // same closed form for both
        row.nlosnlos_sim = point.stats.nlosnlos_power.mean();
        row.nlosnlos_theory = theory.nlosnlos_inner;
        row.cross_abs_mean = std::abs(point.stats.cross_los_nlos.mean());
        row.cross_se = point.stats.cross_los_nlos.se_magnitude();
        for (const ComplexAccumulator& pair : point.stats.pair_terms) {
            // pair sum = term + conj(term): mean 2 Re, SE from the real part
            const double abs_mean = std::abs(2.0 * pair.real_part().mean());
            if (abs_mean >= row.max_pair_abs_mean) {
                row.max_pair_abs_mean = abs_mean;
                row.max_pair_se = 2.0 * pair.real_part().std_error();
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace riscorr

#endif  // RISCORR_EXPERIMENTS_HPP
