// Copyright 2026 The jarlskog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only utilities. Everything here stays independent of the library
// internals it is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "jarlskog/cmatrix.hpp"

namespace jtest {

using jarlskog::CMatrix;
using jarlskog::Complex;

inline CMatrix from_rows(const std::vector<std::vector<Complex>>& rows) {
    const int n = static_cast<int>(rows.size());
    CMatrix m(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

inline CMatrix random_matrix(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix m(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m(r, c) = Complex{gauss(rng), gauss(rng)};
    }
    return m;
}

inline CMatrix random_skew_hermitian(int n, std::mt19937_64& rng) {
    const CMatrix a = random_matrix(n, rng);
    CMatrix x(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) x(r, c) = 0.5 * (a(r, c) - std::conj(a(c, r)));
    }
    return x;
}

// Generator whose exponential the closed-form block should equal:
// column j holds z, row j holds -z conjugated, zero elsewhere.
inline CMatrix skew_block_generator(int n, int j, const std::vector<Complex>& z) {
    CMatrix x(n);
    for (int p = 0; p < j - 1; ++p) {
        x(p, j - 1) = z[p];
        x(j - 1, p) = -std::conj(z[p]);
    }
    return x;
}

inline std::vector<Complex> random_vector(int len, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> z(len);
    for (Complex& c : z) c = Complex{gauss(rng), gauss(rng)};
    return z;
}

// Random vector rescaled to a uniform radius in (0, max_norm].
inline std::vector<Complex> random_vector_with_norm_below(int len, double max_norm,
                                                          std::mt19937_64& rng) {
    std::vector<Complex> z = random_vector(len, rng);
    double nrm = 0.0;
    for (const Complex& c : z) nrm += std::norm(c);
    nrm = std::sqrt(nrm);
    std::uniform_real_distribution<double> radius(0.0, max_norm);
    const double target = radius(rng);
    for (Complex& c : z) c *= target / nrm;
    return z;
}

inline std::vector<Complex> random_unit_vector(int len, std::mt19937_64& rng) {
    std::vector<Complex> z = random_vector(len, rng);
    double nrm = 0.0;
    for (const Complex& c : z) nrm += std::norm(c);
    nrm = std::sqrt(nrm);
    for (Complex& c : z) c /= nrm;
    return z;
}

// Determinant via LU with partial pivoting; fine at these sizes.
inline Complex determinant(CMatrix m) {
    const int n = m.dim();
    Complex det{1.0, 0.0};
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
        }
        if (std::abs(m(pivot, col)) == 0.0) return Complex{0.0, 0.0};
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            const Complex f = m(r, col) / m(col, col);
            for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

}  // namespace jtest
