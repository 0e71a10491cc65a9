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

#ifndef RISCORR_ANALYTICS_HPP
#define RISCORR_ANALYTICS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace riscorr {

namespace detail {

inline void check_counts(int paths, int elements_or_antennas, double kappa,
                         const char* where) {
    if (paths < 1 || elements_or_antennas < 1)
        throw std::invalid_argument(std::string(where) + ": counts must be positive");
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument(std::string(where) +
                                    ": Rician factor must be finite and >= 0");
}

}  // namespace detail

/// Mean power of the LoS part of one cascade channel:
/// (L/N) kappa/(kappa+1).
inline double mean_los_power(int paths, int ris_elements, double kappa) {
    detail::check_counts(paths, ris_elements, kappa, "mean_los_power");
    return static_cast<double>(paths) / ris_elements * (kappa / (kappa + 1.0));
}

/// Mean power of the NLoS part of one cascade channel: M L / (kappa+1).
inline double mean_nlos_power(int paths, int bs_antennas, double kappa) {
    detail::check_counts(paths, bs_antennas, kappa, "mean_nlos_power");
    return static_cast<double>(bs_antennas) * paths / (kappa + 1.0);
}

/// Mean power of one cascade channel; the LoS/NLoS cross terms have zero
/// mean and do not contribute.
inline double mean_channel_power(int paths, int ris_elements, int bs_antennas,
                                 double kappa) {
    return mean_los_power(paths, ris_elements, kappa) +
           mean_nlos_power(paths, bs_antennas, kappa);
}

/// Mean power of the LoS x LoS inner product between the two users'
/// cascades: (Lk Ll / N^2) (kappa/(kappa+1))^2.
inline double inner_power_loslos(int paths_k, int paths_l, int ris_elements,
                                 double kappa) {
    detail::check_counts(paths_k, ris_elements, kappa, "inner_power_loslos");
    detail::check_counts(paths_l, ris_elements, kappa, "inner_power_loslos");
    const double ratio = kappa / (kappa + 1.0);
    const double n = static_cast<double>(ris_elements);
    return static_cast<double>(paths_k) * paths_l / (n * n) * ratio * ratio;
}

/// Mean power of either mixed LoS x NLoS inner product (the two are
/// identical): (Lk Ll / N) kappa/(kappa+1)^2.
inline double inner_power_losnlos(int paths_k, int paths_l, int ris_elements,
                                  double kappa) {
    detail::check_counts(paths_k, ris_elements, kappa, "inner_power_losnlos");
    detail::check_counts(paths_l, ris_elements, kappa, "inner_power_losnlos");
    const double kp1 = kappa + 1.0;
    return static_cast<double>(paths_k) * paths_l / ris_elements * kappa / (kp1 * kp1);
}

/// Mean power of the NLoS x NLoS inner product: M Lk Ll / (kappa+1)^2.
inline double inner_power_nlosnlos(int paths_k, int paths_l, int bs_antennas,
                                   double kappa) {
    detail::check_counts(paths_k, bs_antennas, kappa, "inner_power_nlosnlos");
    detail::check_counts(paths_l, bs_antennas, kappa, "inner_power_nlosnlos");
    const double kp1 = kappa + 1.0;
    return static_cast<double>(bs_antennas) * paths_k * paths_l / (kp1 * kp1);
}

/// Closed-form approximation of the mean squared correlation coefficient
/// between the two cascades:
///
///   1 - (M - 1)(M + 2 kappa/N) / (kappa/N + M)^2
///
/// Always in (0, 1]; independent of the path counts and of the phase
/// configuration. The single-antenna case is pinned to exactly 1.
inline double approx_mean_sq_corr(int bs_antennas, int ris_elements, double kappa) {
    detail::check_counts(1, bs_antennas, kappa, "approx_mean_sq_corr");
    detail::check_counts(1, ris_elements, kappa, "approx_mean_sq_corr");
    if (bs_antennas == 1)
        return 1.0;
    const double m = static_cast<double>(bs_antennas);
    const double x = kappa / ris_elements;
    const double root = x + m;
    return 1.0 - (m - 1.0) * (m + 2.0 * x) / (root * root);
}

/// Jensen upper bound on the mean correlation coefficient:
/// sqrt(approx_mean_sq_corr).
inline double mean_corr_upper(int bs_antennas, int ris_elements, double kappa) {
    return std::sqrt(approx_mean_sq_corr(bs_antennas, ris_elements, kappa));
}

/// Limit of the mean correlation coefficient as the element count grows
/// (equivalently, as the LoS vanishes): sqrt(1/M).
inline double asymptotic_corr(int bs_antennas) {
    if (bs_antennas < 1)
        throw std::invalid_argument("asymptotic_corr: antenna count must be positive");
    return std::sqrt(1.0 / bs_antennas);
}

/// Closed-form mean powers of the cascade components and of the pairwise
/// inner products; the LoS/NLoS cross term is identically zero and kept as
/// an explicit field.
struct ComponentPowers {
    double los_power = 0.0;
    double nlos_power = 0.0;
    double cross_power = 0.0;  // always zero
    double loslos_inner = 0.0;
    double losnlos_inner = 0.0;
    double nlosnlos_inner = 0.0;
};

inline ComponentPowers component_powers(int paths_k, int paths_l, int ris_elements,
                                        int bs_antennas, double kappa) {
    ComponentPowers out;
    out.los_power = mean_los_power(paths_k, ris_elements, kappa);
    out.nlos_power = mean_nlos_power(paths_k, bs_antennas, kappa);
    out.cross_power = 0.0;
    out.loslos_inner = inner_power_loslos(paths_k, paths_l, ris_elements, kappa);
    out.losnlos_inner = inner_power_losnlos(paths_k, paths_l, ris_elements, kappa);
    out.nlosnlos_inner = inner_power_nlosnlos(paths_k, paths_l, bs_antennas, kappa);
    return out;
}

/// Theory bundle reported next to every Monte Carlo estimate.
struct CorrelationPrediction {
    double mean_rho_sq = 0.0;
    double mean_rho_upper = 0.0;
    double asymptote = 0.0;
};

inline CorrelationPrediction predict_correlation(int bs_antennas, int ris_elements,
                                                 double kappa) {
    CorrelationPrediction out;
    out.mean_rho_sq = approx_mean_sq_corr(bs_antennas, ris_elements, kappa);
    out.mean_rho_upper = std::sqrt(out.mean_rho_sq);
    out.asymptote = asymptotic_corr(bs_antennas);
    return out;
}

}  // namespace riscorr

#endif  // RISCORR_ANALYTICS_HPP
