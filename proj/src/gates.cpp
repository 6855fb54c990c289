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

#include "jarlskog/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace jarlskog {

namespace {

void require_dim(int n, const char* op) {
    if (n < 2) {
        throw std::invalid_argument(std::string(op) + ": dimension must be >= 2, got " +
                                    std::to_string(n));
    }
}

// sigma^k with the exponent reduced mod n, evaluated on the reduced
// angle so powers stay accurate for any n. Quarter turns are exact.
Complex root_power(int n, long long k) {
    long long e = k % n;
    if (e < 0) e += n;
    if (e == 0) return Complex{1.0, 0.0};
    if (2 * e == n) return Complex{-1.0, 0.0};
    if (4 * e == n) return Complex{0.0, 1.0};
    if (4 * e == 3LL * n) return Complex{0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / n;
    return Complex{std::cos(angle), std::sin(angle)};
}

}  // namespace

Complex primitive_root(int n) {
    require_dim(n, "primitive_root");
    return root_power(n, 1);
}

CMatrix sigma1(int n) {
    require_dim(n, "sigma1");
    CMatrix m(n);
    m(0, n - 1) = 1.0;
    for (int k = 1; k < n; ++k) m(k, k - 1) = 1.0;
    return m;
}

CMatrix sigma3(int n) {
    require_dim(n, "sigma3");
    CMatrix m(n);
    for (int k = 0; k < n; ++k) m(k, k) = root_power(n, k);
    return m;
}

CMatrix pauli_power(int n, int a, int b) {
    require_dim(n, "pauli_power");
    if (a < 0 || a > n - 1 || b < 0 || b > n - 1) {
        throw std::invalid_argument("pauli_power: exponents must lie in [0, n-1], got a=" +
                                    std::to_string(a) + ", b=" + std::to_string(b));
    }
    // (Sigma1^a Sigma3^b)_{rc} = sigma^{bc} when r = c + a (mod n).
    CMatrix m(n);
    for (int c = 0; c < n; ++c) {
        const int r = (c + a) % n;
        m(r, c) = root_power(n, static_cast<long long>(b) * c);
    }
    return m;
}

CMatrix walsh(int n) {
    require_dim(n, "walsh");
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    CMatrix m(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            // Conjugating the W† entry keeps walsh_dagger == dagger(walsh) exact.
            m(a, b) = std::conj(root_power(n, static_cast<long long>(a) * b)) * inv_sqrt_n;
        }
    }
    return m;
}

CMatrix walsh_dagger(int n) {
    require_dim(n, "walsh_dagger");
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    CMatrix m(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            m(a, b) = root_power(n, static_cast<long long>(a) * b) * inv_sqrt_n;
        }
    }
    return m;
}

CMatrix k_matrix(int n) {
    require_dim(n, "k_matrix");
    CMatrix m(n);
    m(0, 0) = 1.0;
    for (int r = 1; r < n; ++r) m(r, n - r) = 1.0;
    return m;
}

CMatrix gate_matrix(const GateId& id) {
    switch (id.kind) {
        case GateKind::Sigma1: return sigma1(id.n);
        case GateKind::Sigma3: return sigma3(id.n);
        case GateKind::PauliPower: return pauli_power(id.n, id.a, id.b);
        case GateKind::WalshHadamard: return walsh(id.n);
        case GateKind::KMatrix: return k_matrix(id.n);
    }
    throw std::invalid_argument("gate_matrix: unknown gate kind");
}

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::Sigma1: return "sigma1";
        case GateKind::Sigma3: return "sigma3";
        case GateKind::PauliPower: return "pauli";
        case GateKind::WalshHadamard: return "walsh";
        case GateKind::KMatrix: return "k";
    }
    throw std::invalid_argument("gate_name: unknown gate kind");
}

}  // namespace jarlskog
