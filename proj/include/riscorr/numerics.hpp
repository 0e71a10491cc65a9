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

#ifndef RISCORR_NUMERICS_HPP
#define RISCORR_NUMERICS_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace riscorr {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Inner product x . y^H = sum_i x_i conj(y_i).
inline Complex inner_product(const ComplexVector& x, const ComplexVector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("inner_product: length mismatch (" +
                                    std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()) + ")");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += x[i] * std::conj(y[i]);
    return acc;
}

/// Squared Euclidean norm.
inline double squared_norm(const ComplexVector& v) {
    double acc = 0.0;
    for (const Complex& z : v)
        acc += std::norm(z);
    return acc;
}

inline double euclidean_norm(const ComplexVector& v) {
    return std::sqrt(squared_norm(v));
}

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
        data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                     Complex{0.0, 0.0});
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Complex& operator()(int r, int c) {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + c];
    }
    const Complex& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + c];
    }

    const ComplexVector& data() const noexcept { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    ComplexVector data_;
};

inline double frobenius_norm_sq(const ComplexMatrix& a) {
    return squared_norm(a.data());
}

}  // namespace riscorr

#endif  // RISCORR_NUMERICS_HPP
