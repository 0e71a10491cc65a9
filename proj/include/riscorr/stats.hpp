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

#ifndef RISCORR_STATS_HPP
#define RISCORR_STATS_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "riscorr/numerics.hpp"

namespace riscorr {

/// One-pass mean/variance accumulator (Welford update) with merge support,
/// so partial results can be reduced without a second pass over the data.
class StatAccumulator {
public:
    void add(double x) {
        if (!std::isfinite(x))
            throw std::invalid_argument("StatAccumulator: non-finite sample");
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    /// Equivalent to accumulating the concatenation of both sample sets.
    void merge(const StatAccumulator& other) {
        if (other.count_ == 0)
            return;
        if (count_ == 0) {
            *this = other;
            return;
        }
        const double na = static_cast<double>(count_);
        const double nb = static_cast<double>(other.count_);
        const double delta = other.mean_ - mean_;
        const double n = na + nb;
        mean_ += delta * nb / n;
        m2_ += other.m2_ + delta * delta * na * nb / n;
        count_ += other.count_;
    }

    std::size_t count() const noexcept { return count_; }

    double mean() const {
        if (count_ == 0)
            throw std::logic_error("StatAccumulator: mean of empty accumulator");
        return mean_;
    }

    /// Unbiased sample variance, defined for count >= 2.
    double variance() const {
        if (count_ < 2)
            throw std::logic_error("StatAccumulator: variance needs at least two samples");
        return m2_ / static_cast<double>(count_ - 1);
    }

    double std_dev() const { return std::sqrt(variance()); }

    /// Standard error of the mean.
    double std_error() const {
        return std::sqrt(variance() / static_cast<double>(count_));
    }

    double sum_sq_dev() const noexcept { return m2_; }

private:
    std::size_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Componentwise accumulator for complex-valued samples.
class ComplexAccumulator {
public:
    void add(Complex z) {
        re_.add(z.real());
        im_.add(z.imag());
    }

    std::size_t count() const noexcept { return re_.count(); }

    Complex mean() const { return {re_.mean(), im_.mean()}; }

    /// Standard error of the magnitude of the sample mean: combines the
    /// component variances, suitable for |mean| < 3 SE zero-mean checks.
    double se_magnitude() const {
        return std::sqrt((re_.variance() + im_.variance()) /
                         static_cast<double>(count()));
    }

    const StatAccumulator& real_part() const noexcept { return re_; }
    const StatAccumulator& imag_part() const noexcept { return im_; }

private:
    StatAccumulator re_;
    StatAccumulator im_;
};

}  // namespace riscorr

#endif  // RISCORR_STATS_HPP
