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

#pragma once

#include <variant>
#include <vector>

#include "jarlskog/cmatrix.hpp"

namespace jarlskog {

/// Diagonal phase module A0({theta_1..theta_n}) = diag(e^{i theta_k}).
struct PhaseModule {
    std::vector<double> thetas;  // radians, one per coordinate
};

/// Block module A_j({z~}; beta): an embedded rotation by angle beta
/// mixing coordinate j with the unit vector z~ in coordinates 1..j-1,
/// identity on coordinates j+1..n.
struct BlockModule {
    int j;                        // 2 <= j <= n
    std::vector<Complex> z_tilde; // length j-1, unit 2-norm
    double beta;                  // radians
};

using ModuleParams = std::variant<PhaseModule, BlockModule>;

/// Ordered module product at fixed dimension n. Factors compose
/// left-to-right; the empty sequence composes to the identity.
struct FactorSequence {
    int n = 0;
    std::vector<ModuleParams> factors;
};

/// diag(e^{i theta_1}, ..., e^{i theta_n}); thetas must be non-empty and finite.
CMatrix make_phase_module(const std::vector<double>& thetas);

/// The block module as an explicit n x n unitary:
///
///   [ I_{j-1} - (1-cos b)|z~><z~|   sin(b)|z~|        ]
///   [ -sin(b)<z~|                   cos(b)            ]
///   [                                          I_{n-j} ]
///
/// Requires 2 <= j <= n and || z_tilde || = 1 within 1e-12.
CMatrix make_block_module(int n, int j, const std::vector<Complex>& z_tilde, double beta);

/// Closed-form exponential of the skew-Hermitian generator whose only
/// nonzero entries are column j = z and row j = -z†: with b = ||z|| and
/// z~ = z/b this equals make_block_module(n, j, z~, b). z = 0 gives I_n.
CMatrix exp_skew_block(int n, int j, const std::vector<Complex>& z);

/// Matrix of a single factor at dimension n.
CMatrix factor_matrix(int n, const ModuleParams& factor);

/// Left-to-right product of the factor matrices; I_n when empty.
CMatrix compose_sequence(const FactorSequence& seq);

/// 2x2 unitary e^{X0} e^{X2} for X0 = diag(i theta1, i theta2) and the
/// off-diagonal generator z, together with its three-factor split
///
///   diag(e^{i phi_left1}, e^{i phi_left2})
///     * [[cos rot, sin rot], [-sin rot, cos rot]]
///     * diag(e^{-i phi_right}, e^{i phi_right})
///
/// where phi_left1 = theta1 + arg(z)/2, phi_left2 = theta2 - arg(z)/2,
/// rot = |z|, phi_right = arg(z)/2 (arg(0) taken as 0).
struct EulerU2 {
    CMatrix matrix;
    double phi_left1;
    double phi_left2;
    double rot;
    double phi_right;
};

EulerU2 euler_u2(double theta1, double theta2, Complex z);

}  // namespace jarlskog
