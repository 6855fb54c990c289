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

#include "jarlskog/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace jarlskog {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kDegenerateTol = 1e-12;

// arg on the branch (-pi, pi].
double principal_arg(Complex c) {
    double a = std::arg(c);
    if (a <= -std::numbers::pi) a = std::numbers::pi;
    return a;
}

CMatrix leading_block(const CMatrix& m, int size) {
    CMatrix out(size);
    for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) out(r, c) = m(r, c);
    }
    return out;
}

void normalize(std::vector<Complex>& z) {
    double s = 0.0;
    for (const Complex& c : z) s += std::norm(c);
    const double nrm = std::sqrt(s);
    for (Complex& c : z) c /= nrm;
}

}  // namespace

NonUnitaryError::NonUnitaryError(double measured)
    : std::runtime_error([measured] {
          std::ostringstream msg;
          msg.precision(3);
          msg << std::scientific << "input is not unitary: unitary error " << measured
              << " exceeds " << kUnitaryTol;
          return msg.str();
      }()),
      measured_(measured) {}

DecompositionResult decompose(const CMatrix& u) {
    const double input_error = unitary_error(u);
    if (input_error > kUnitaryTol) {
        throw NonUnitaryError(input_error);
    }
    const int n = u.dim();
    std::vector<double> thetas(n, 0.0);
    std::vector<ModuleParams> blocks;  // collected for j = n down to 2
    blocks.reserve(n > 1 ? n - 1 : 0);

    CMatrix work = u;
    for (int m = n; m >= 2; --m) {
        const Complex corner = work(m - 1, m - 1);
        const double mag = std::abs(corner);
        double beta;
        double theta;
        std::vector<Complex> z_tilde(m - 1, Complex{0.0, 0.0});
        if (mag >= 1.0 - kDegenerateTol) {
            // sin(beta) vanishes and the block is the identity for any
            // direction; pick the first basis vector.
            beta = 0.0;
            theta = principal_arg(corner);
            z_tilde[0] = 1.0;
        } else if (mag <= kDegenerateTol) {
            // The corner phase is pure gauge here; absorb it into z~.
            beta = std::numbers::pi / 2.0;
            theta = 0.0;
            for (int k = 0; k < m - 1; ++k) z_tilde[k] = -std::conj(work(m - 1, k));
            normalize(z_tilde);
        } else {
            beta = std::acos(std::min(mag, 1.0));
            theta = principal_arg(corner);
            const Complex phase{std::cos(theta), std::sin(theta)};
            const double inv_sin = 1.0 / std::sin(beta);
            for (int k = 0; k < m - 1; ++k) {
                z_tilde[k] = -phase * std::conj(work(m - 1, k)) * inv_sin;
            }
            normalize(z_tilde);
        }
        thetas[m - 1] = theta;
        // Strip the block off the right and shrink to the leading square.
        const CMatrix inverse_block = make_block_module(m, m, z_tilde, -beta);
        work = leading_block(mat_mul(work, inverse_block), m - 1);
        blocks.emplace_back(BlockModule{m, std::move(z_tilde), beta});
    }
    thetas[0] = principal_arg(work(0, 0));

    FactorSequence seq;
    seq.n = n;
    seq.factors.reserve(n);
    seq.factors.emplace_back(PhaseModule{std::move(thetas)});
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        seq.factors.emplace_back(std::move(*it));
    }

    DecompositionResult result;
    result.residual = max_abs_diff(compose_sequence(seq), u);
    result.sequence = std::move(seq);
    return result;
}

double roundtrip_error(const CMatrix& u) {
    return decompose(u).residual;
}

}  // namespace jarlskog
