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

#include <string>

#include "jarlskog/cmatrix.hpp"

namespace jarlskog {

enum class GateKind { Sigma1, Sigma3, PauliPower, WalshHadamard, KMatrix };

/// A named gate target: gate family, dimension, and (for PauliPower)
/// the exponents a, b with 0 <= a, b <= n-1.
struct GateId {
    GateKind kind;
    int n;
    int a = 0;
    int b = 0;
};

/// sigma = e^{2 pi i / n}, the primitive n-th root of unity. n >= 2.
Complex primitive_root(int n);

/// Cyclic shift: 1 at (1, n) and at (k+1, k); Sigma1^n = I exactly.
CMatrix sigma1(int n);

/// Clock matrix diag(1, sigma, sigma^2, ..., sigma^{n-1}).
CMatrix sigma3(int n);

/// Sigma1^a * Sigma3^b with no extra phase. 0 <= a, b <= n-1.
CMatrix pauli_power(int n, int a, int b);

/// Generalized Walsh-Hadamard matrix: W_ab = sigma^{-ab} / sqrt(n),
/// 0-based indices. Unitary; conjugates the clock into the shift.
CMatrix walsh(int n);

/// W† with entries sigma^{ab} / sqrt(n); equals dagger(walsh(n)) exactly.
/// For n a power of two this is the DFT coefficient matrix.
CMatrix walsh_dagger(int n);

/// Permutation fixing the first coordinate and reversing the rest;
/// K^2 = I exactly, and K = W^2.
CMatrix k_matrix(int n);

/// Direct constructor for any GateId.
CMatrix gate_matrix(const GateId& id);

/// CLI/file name of the gate family: sigma1, sigma3, pauli, walsh, k.
std::string gate_name(GateKind kind);

}  // namespace jarlskog
