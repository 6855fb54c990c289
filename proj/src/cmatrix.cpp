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

#include "jarlskog/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jarlskog {

CMatrix::CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Complex{0.0, 0.0}) {
    if (n < 1) {
        throw std::invalid_argument("CMatrix: dimension must be >= 1, got " + std::to_string(n));
    }
}

CMatrix::CMatrix(int n, std::vector<Complex> entries) : n_(n), a_(std::move(entries)) {
    if (n < 1) {
        throw std::invalid_argument("CMatrix: dimension must be >= 1, got " + std::to_string(n));
    }
    if (a_.size() != static_cast<size_t>(n) * n) {
        throw std::invalid_argument("CMatrix: expected " + std::to_string(n) + "x" +
                                    std::to_string(n) + " entries, got " +
                                    std::to_string(a_.size()));
    }
    for (const Complex& c : a_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("CMatrix: entries must be finite");
        }
    }
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

namespace {

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
    }
}

}  // namespace

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b, "mat_mul");
    const int n = a.dim();
    CMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

CMatrix dagger(const CMatrix& a) {
    const int n = a.dim();
    CMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out(i, j) = std::conj(a(j, i));
        }
    }
    return out;
}

CMatrix add(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b, "add");
    const int n = a.dim();
    CMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out(i, j) = a(i, j) + b(i, j);
    }
    return out;
}

CMatrix scale(const CMatrix& a, Complex factor) {
    const int n = a.dim();
    CMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out(i, j) = factor * a(i, j);
    }
    return out;
}

double unitary_error(const CMatrix& u) {
    const int n = u.dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex s{0.0, 0.0};
            for (int k = 0; k < n; ++k) {
                s += std::conj(u(k, i)) * u(k, j);
            }
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

CMatrix mat_exp_series(const CMatrix& x, int terms) {
    if (terms < 1) {
        throw std::invalid_argument("mat_exp_series: terms must be >= 1");
    }
    const int n = x.dim();
    CMatrix acc = CMatrix::identity(n);
    CMatrix term = CMatrix::identity(n);
    for (int k = 1; k <= terms; ++k) {
        term = scale(mat_mul(term, x), Complex{1.0 / k, 0.0});
        acc = add(acc, term);
    }
    return acc;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    const int n = a.dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

}  // namespace jarlskog
