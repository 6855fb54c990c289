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

#include <complex>
#include <vector>

namespace jarlskog {

using Complex = std::complex<double>;

/// Dense complex square matrix, row-major, double precision.
///
/// The universal value type of the library. Values are treated as
/// immutable once built: every operation takes const references and
/// returns a fresh matrix, so concurrent use on shared inputs is safe.
class CMatrix {
  public:
    /// Zero matrix of dimension n (n >= 1).
    explicit CMatrix(int n);

    /// Matrix from row-major entries; entries.size() must equal n*n and
    /// every entry must be finite.
    CMatrix(int n, std::vector<Complex> entries);

    static CMatrix identity(int n);

    int dim() const { return n_; }

    Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
    const Complex& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

    const std::vector<Complex>& entries() const { return a_; }

    /// Exact elementwise equality (bitwise on both components).
    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

  private:
    int n_;
    std::vector<Complex> a_;
};

/// Standard complex matrix product. Throws on dimension mismatch.
CMatrix mat_mul(const CMatrix& a, const CMatrix& b);

/// Conjugate transpose.
CMatrix dagger(const CMatrix& a);

/// Entrywise sum. Throws on dimension mismatch.
CMatrix add(const CMatrix& a, const CMatrix& b);

/// Entrywise scaling by a complex factor.
CMatrix scale(const CMatrix& a, Complex factor);

/// Max absolute entry of U†U - I; zero iff U is exactly unitary.
double unitary_error(const CMatrix& u);

/// Partial Taylor sum sum_{k=0}^{terms} X^k / k!, terms >= 1.
///
/// Deliberately plain summation, no scaling-and-squaring: this is the
/// reference oracle for the exponential map on inputs of modest norm,
/// where 64 terms reach ~1e-12 of the true exponential.
CMatrix mat_exp_series(const CMatrix& x, int terms);

/// Max over entries of |a_ij - b_ij|. Throws on dimension mismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace jarlskog
