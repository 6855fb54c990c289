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

#include "jarlskog/modules.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jarlskog {

namespace {

double norm2(const std::vector<Complex>& z) {
    double s = 0.0;
    for (const Complex& c : z) s += std::norm(c);
    return std::sqrt(s);
}

void require_finite(const std::vector<Complex>& z, const char* op) {
    for (const Complex& c : z) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument(std::string(op) + ": entries must be finite");
        }
    }
}

void require_block_shape(int n, int j, size_t z_len, const char* op) {
    if (j < 2 || j > n) {
        throw std::invalid_argument(std::string(op) + ": index j must satisfy 2 <= j <= n, got j=" +
                                    std::to_string(j) + ", n=" + std::to_string(n));
    }
    if (z_len != static_cast<size_t>(j - 1)) {
        throw std::invalid_argument(std::string(op) + ": vector must have length j-1 = " +
                                    std::to_string(j - 1) + ", got " + std::to_string(z_len));
    }
}

}  // namespace

CMatrix make_phase_module(const std::vector<double>& thetas) {
    if (thetas.empty()) {
        throw std::invalid_argument("make_phase_module: empty angle list");
    }
    const int n = static_cast<int>(thetas.size());
    CMatrix m(n);
    for (int k = 0; k < n; ++k) {
        if (!std::isfinite(thetas[k])) {
            throw std::invalid_argument("make_phase_module: angles must be finite");
        }
        m(k, k) = Complex{std::cos(thetas[k]), std::sin(thetas[k])};
    }
    return m;
}

CMatrix make_block_module(int n, int j, const std::vector<Complex>& z_tilde, double beta) {
    require_block_shape(n, j, z_tilde.size(), "make_block_module");
    require_finite(z_tilde, "make_block_module");
    if (!std::isfinite(beta)) {
        throw std::invalid_argument("make_block_module: beta must be finite");
    }
    const double nrm = norm2(z_tilde);
    if (std::abs(nrm - 1.0) > 1e-12) {
        throw std::invalid_argument("make_block_module: z_tilde must be a unit vector (norm " +
                                    std::to_string(nrm) + ")");
    }

    const double c = std::cos(beta);
    const double s = std::sin(beta);
    CMatrix m = CMatrix::identity(n);
    for (int p = 0; p < j - 1; ++p) {
        for (int q = 0; q < j - 1; ++q) {
            m(p, q) -= (1.0 - c) * z_tilde[p] * std::conj(z_tilde[q]);
        }
        m(p, j - 1) = s * z_tilde[p];
        m(j - 1, p) = -s * std::conj(z_tilde[p]);
    }
    m(j - 1, j - 1) = c;
    return m;
}

CMatrix exp_skew_block(int n, int j, const std::vector<Complex>& z) {
    require_block_shape(n, j, z.size(), "exp_skew_block");
    require_finite(z, "exp_skew_block");
    const double beta = norm2(z);
    if (beta == 0.0) {
        return CMatrix::identity(n);
    }
    std::vector<Complex> z_tilde(z.size());
    for (size_t k = 0; k < z.size(); ++k) z_tilde[k] = z[k] / beta;
    return make_block_module(n, j, z_tilde, beta);
}

CMatrix factor_matrix(int n, const ModuleParams& factor) {
    if (const auto* phase = std::get_if<PhaseModule>(&factor)) {
        if (static_cast<int>(phase->thetas.size()) != n) {
            throw std::invalid_argument("factor_matrix: phase factor has " +
                                        std::to_string(phase->thetas.size()) +
                                        " angles but the sequence dimension is " +
                                        std::to_string(n));
        }
        return make_phase_module(phase->thetas);
    }
    const auto& block = std::get<BlockModule>(factor);
    return make_block_module(n, block.j, block.z_tilde, block.beta);
}

CMatrix compose_sequence(const FactorSequence& seq) {
    if (seq.n < 1) {
        throw std::invalid_argument("compose_sequence: dimension must be >= 1");
    }
    CMatrix out = CMatrix::identity(seq.n);
    for (const ModuleParams& factor : seq.factors) {
        out = mat_mul(out, factor_matrix(seq.n, factor));
    }
    return out;
}

EulerU2 euler_u2(double theta1, double theta2, Complex z) {
    const double alpha = (z == Complex{0.0, 0.0}) ? 0.0 : std::arg(z);
    const CMatrix u =
        mat_mul(make_phase_module({theta1, theta2}), exp_skew_block(2, 2, {z}));
    return EulerU2{u, theta1 + alpha / 2.0, theta2 - alpha / 2.0, std::abs(z), alpha / 2.0};
}

}  // namespace jarlskog
