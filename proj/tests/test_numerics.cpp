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
#include <limits>
#include <vector>

#include "riscorr/numerics.hpp"
#include "riscorr/random.hpp"
#include "riscorr/stats.hpp"

using namespace riscorr;

TEST_CASE("inner_product: hand-computed values") {
    const Complex j{0.0, 1.0};

    // self inner product equals the squared norm
    const ComplexVector a{Complex{1.0, 0.0}, j};
    const Complex self = inner_product(a, a);
    CHECK(std::abs(self - Complex{2.0, 0.0}) < 1e-15);

    // orthogonal vectors
    const ComplexVector e0{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    const ComplexVector e1{Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    CHECK(std::abs(inner_product(e0, e1)) < 1e-15);

    // (1+j)(-j) + 2(1+j) = 3+j
    const ComplexVector x{Complex{1.0, 1.0}, Complex{2.0, 0.0}};
    const ComplexVector y{j, Complex{1.0, -1.0}};
    CHECK(std::abs(inner_product(x, y) - Complex{3.0, 1.0}) < 1e-15);
}

TEST_CASE("inner_product: length mismatch is rejected") {
    const ComplexVector x(3), y(4);
    CHECK_THROWS_AS((void)inner_product(x, y), std::invalid_argument);
}

TEST_CASE("inner_product: algebraic properties on random vectors") {
    RandomStream stream(1234);
    for (int trial = 0; trial < 50; ++trial) {
        ComplexVector x(8), y(8);
        for (int i = 0; i < 8; ++i) {
            x[i] = sample_standard_complex_gaussian(stream);
            y[i] = sample_standard_complex_gaussian(stream);
        }
        const Complex self = inner_product(x, x);
        CHECK(std::abs(self.imag()) < 1e-14);
        CHECK(self.real() >= 0.0);
        CHECK(std::abs(self.real() - squared_norm(x)) < 1e-12 * (1.0 + self.real()));

        const Complex xy = inner_product(x, y);
        const Complex yx = inner_product(y, x);
        CHECK(std::abs(xy - std::conj(yx)) < 1e-12);
    }
}

TEST_CASE("complex gaussian: moments over one million draws") {
    RandomStream stream(20260808);
    const int draws = 1'000'000;
    StatAccumulator re, im, power, cross;
    for (int i = 0; i < draws; ++i) {
        const Complex z = sample_standard_complex_gaussian(stream);
        re.add(z.real());
        im.add(z.imag());
        power.add(std::norm(z));
        cross.add(z.real() * z.imag());
    }
    CHECK(std::hypot(re.mean(), im.mean()) < 0.005);
    CHECK(std::abs(power.mean() - 1.0) < 0.01);
    // parts each carry half the variance
    CHECK(std::abs(re.variance() - 0.5) < 0.01);
    CHECK(std::abs(im.variance() - 0.5) < 0.01);
    // empirical covariance between the parts
    CHECK(std::abs(cross.mean()) < 0.005);
}

TEST_CASE("complex gaussian: same stream, same sequence") {
    RandomStream a(77, 3), b(77, 3);
    for (int i = 0; i < 100; ++i) {
        const Complex za = sample_standard_complex_gaussian(a);
        const Complex zb = sample_standard_complex_gaussian(b);
        CHECK(za == zb);
    }
}

TEST_CASE("random streams: distinct indices decorrelate") {
    RandomStream a(9001, 0), b(9001, 1);
    StatAccumulator prod;
    for (int i = 0; i < 100'000; ++i)
        prod.add((a.next_double() - 0.5) * (b.next_double() - 0.5));
    // covariance of independent uniforms is 0, each variance 1/12
    CHECK(std::abs(prod.mean()) < 3.0 * prod.std_error());
}

TEST_CASE("sample_uniform: mean and range") {
    RandomStream stream(5150);
    StatAccumulator acc;
    for (int i = 0; i < 1'000'000; ++i)
        acc.add(sample_uniform(stream, 0.0, 1.0));
    CHECK(std::abs(acc.mean() - 0.5) < 0.001);

    RandomStream ranged(5151);
    for (int i = 0; i < 100'000; ++i) {
        const double v = sample_uniform(ranged, -0.5, 0.5);
        CHECK(v >= -0.5);
        CHECK(v < 0.5);
    }

    RandomStream c(21, 4), d(21, 4);
    for (int i = 0; i < 100; ++i)
        CHECK(sample_uniform(c, -3.0, 9.0) == sample_uniform(d, -3.0, 9.0));
}

TEST_CASE("sample_uniform: invalid range is rejected") {
    RandomStream stream(1);
    CHECK_THROWS_AS((void)sample_uniform(stream, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)sample_uniform(stream, 2.0, -2.0), std::invalid_argument);
}

TEST_CASE("StatAccumulator: small exact cases") {
    StatAccumulator acc;
    CHECK_THROWS_AS((void)acc.mean(), std::logic_error);
    acc.add(3.0);
    CHECK(acc.count() == 1);
    CHECK(acc.mean() == 3.0);
    CHECK_THROWS_AS((void)acc.variance(), std::logic_error);
    acc.add(1.0);
    CHECK(std::abs(acc.mean() - 2.0) < 1e-15);
    CHECK(std::abs(acc.variance() - 2.0) < 1e-15);
}

TEST_CASE("StatAccumulator: non-finite samples are rejected") {
    StatAccumulator acc;
    CHECK_THROWS_AS(acc.add(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    CHECK_THROWS_AS(acc.add(std::numeric_limits<double>::infinity()), std::invalid_argument);
    CHECK(acc.count() == 0);
}

TEST_CASE("StatAccumulator: matches the two-pass computation") {
    RandomStream stream(31337);
    std::vector<double> samples(10'000);
    StatAccumulator acc;
    for (double& x : samples) {
        x = sample_uniform(stream, -50.0, 150.0);
        acc.add(x);
    }
    // two-pass oracle
    double sum = 0.0;
    for (double x : samples)
        sum += x;
    const double mean = sum / static_cast<double>(samples.size());
    double sq = 0.0;
    for (double x : samples)
        sq += (x - mean) * (x - mean);
    const double variance = sq / static_cast<double>(samples.size() - 1);

    CHECK(std::abs(acc.mean() - mean) < 1e-10 * std::abs(mean));
    CHECK(std::abs(acc.variance() - variance) < 1e-10 * variance);
}

TEST_CASE("StatAccumulator: merge is associative and order-insensitive") {
    RandomStream stream(404);
    std::vector<double> samples(3'000);
    for (double& x : samples)
        x = sample_uniform(stream, -1.0, 4.0);

    StatAccumulator a, b, c, whole;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        whole.add(samples[i]);
        (i < 1000 ? a : i < 1700 ? b : c).add(samples[i]);
    }

    StatAccumulator left = a;
    left.merge(b);
    left.merge(c);

    StatAccumulator bc = b;
    bc.merge(c);
    StatAccumulator right = a;
    right.merge(bc);

    for (const StatAccumulator* merged : {&left, &right}) {
        CHECK(merged->count() == whole.count());
        CHECK(std::abs(merged->mean() - whole.mean()) < 1e-9 * std::abs(whole.mean()));
        CHECK(std::abs(merged->variance() - whole.variance()) < 1e-9 * whole.variance());
    }
}

TEST_CASE("ComplexMatrix: shape checks") {
    ComplexMatrix m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    m(1, 2) = Complex{1.0, -1.0};
    CHECK(std::abs(frobenius_norm_sq(m) - 2.0) < 1e-15);
    CHECK_THROWS_AS(ComplexMatrix(0, 2), std::invalid_argument);
}
