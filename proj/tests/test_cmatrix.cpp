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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "jarlskog/cmatrix.hpp"
#include "jarlskog/gates.hpp"

using namespace jarlskog;
using jtest::from_rows;

namespace {

constexpr double kPi = std::numbers::pi;

// Naive per-entry product, written independently of mat_mul.
CMatrix naive_product(const CMatrix& a, const CMatrix& b) {
    const int n = a.dim();
    CMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex s{0.0, 0.0};
            for (int k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            out(i, j) = s;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("CMatrix construction validates its input") {
    CHECK_THROWS_AS(CMatrix(0), std::invalid_argument);
    CHECK_THROWS_AS(CMatrix(2, std::vector<Complex>(3)), std::invalid_argument);
    std::vector<Complex> bad(4, Complex{0.0, 0.0});
    bad[2] = Complex{std::nan(""), 0.0};
    CHECK_THROWS_AS(CMatrix(2, bad), std::invalid_argument);
}

TEST_CASE("mat_mul: identity times M is M") {
    std::mt19937_64 rng(11);
    const CMatrix m = jtest::random_matrix(3, rng);
    CHECK(max_abs_diff(mat_mul(CMatrix::identity(3), m), m) == 0.0);
}

TEST_CASE("mat_mul: the shift squared shifts twice") {
    const CMatrix expected = from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(max_abs_diff(mat_mul(sigma1(3), sigma1(3)), expected) == 0.0);
}

TEST_CASE("mat_mul matches a naive per-entry oracle") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix a = jtest::random_matrix(4, rng);
        const CMatrix b = jtest::random_matrix(4, rng);
        CHECK(max_abs_diff(mat_mul(a, b), naive_product(a, b)) <= 1e-13);
    }
}

TEST_CASE("mat_mul rejects mismatched dimensions") {
    CHECK_THROWS_AS(mat_mul(CMatrix::identity(2), CMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("mat_mul is associative on random triples") {
    std::mt19937_64 rng(13);
    for (int n : {2, 5, 16}) {
        const CMatrix a = jtest::random_matrix(n, rng);
        const CMatrix b = jtest::random_matrix(n, rng);
        const CMatrix c = jtest::random_matrix(n, rng);
        CHECK(max_abs_diff(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c))) <= 1e-12);
    }
}

TEST_CASE("dagger: pure imaginary diagonal flips sign") {
    const CMatrix m = from_rows({{Complex{0, 1}, 0}, {0, Complex{0, -1}}});
    const CMatrix expected = from_rows({{Complex{0, -1}, 0}, {0, Complex{0, 1}}});
    CHECK(max_abs_diff(dagger(m), expected) == 0.0);
}

TEST_CASE("dagger of the four-level Walsh matrix is the DFT pattern") {
    const Complex i{0, 1};
    const CMatrix expected = scale(from_rows({{1, 1, 1, 1},
                                              {1, i, -1, -i},
                                              {1, -1, 1, -1},
                                              {1, -i, -1, i}}),
                                   0.5);
    CHECK(max_abs_diff(dagger(walsh(4)), expected) <= 1e-15);
}

TEST_CASE("dagger reverses products") {
    std::mt19937_64 rng(14);
    const CMatrix a = jtest::random_matrix(5, rng);
    const CMatrix b = jtest::random_matrix(5, rng);
    CHECK(max_abs_diff(dagger(mat_mul(a, b)), mat_mul(dagger(b), dagger(a))) <= 1e-13);
}

TEST_CASE("dagger is an exact involution") {
    std::mt19937_64 rng(15);
    const CMatrix m = jtest::random_matrix(6, rng);
    CHECK(dagger(dagger(m)) == m);
}

TEST_CASE("unitary_error") {
    CHECK(unitary_error(CMatrix::identity(4)) == 0.0);
    CHECK(unitary_error(walsh(3)) <= 1e-13);
    CHECK(unitary_error(scale(CMatrix::identity(3), 2.0)) == 3.0);
}

TEST_CASE("mat_exp_series: zero matrix gives the identity") {
    CHECK(max_abs_diff(mat_exp_series(CMatrix(4), 8), CMatrix::identity(4)) == 0.0);
}

TEST_CASE("mat_exp_series: real 2x2 generator gives a rotation") {
    CMatrix x(2);
    x(0, 1) = kPi / 4.0;
    x(1, 0) = -kPi / 4.0;
    const double c = std::cos(kPi / 4.0);
    const double s = std::sin(kPi / 4.0);
    const CMatrix expected = from_rows({{c, s}, {-s, c}});
    CHECK(max_abs_diff(mat_exp_series(x, 64), expected) <= 1e-14);
}

TEST_CASE("mat_exp_series of a skew-Hermitian matrix is unitary") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 5; ++trial) {
        const CMatrix x = jtest::random_skew_hermitian(6, rng);
        CHECK(unitary_error(mat_exp_series(x, 64)) <= 1e-11);
    }
}

TEST_CASE("mat_exp_series validates the term count") {
    CHECK_THROWS_AS(mat_exp_series(CMatrix(2), 0), std::invalid_argument);
}

TEST_CASE("max_abs_diff") {
    std::mt19937_64 rng(17);
    const CMatrix m = jtest::random_matrix(4, rng);
    CHECK(max_abs_diff(m, m) == 0.0);

    const CMatrix pauli_z = from_rows({{1, 0}, {0, -1}});
    CHECK(max_abs_diff(CMatrix::identity(2), pauli_z) == 2.0);

    const CMatrix a = jtest::random_matrix(5, rng);
    const CMatrix b = jtest::random_matrix(5, rng);
    double worst = 0.0;
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    }
    CHECK(max_abs_diff(a, b) == worst);

    CHECK_THROWS_AS(max_abs_diff(CMatrix(2), CMatrix(3)), std::invalid_argument);
}

TEST_CASE("odd powers of the compressed skew block collapse onto it") {
    // K^{2m+1} = (-<z|z>)^m K for the j x j block [[0, z], [-z^dag, 0]].
    std::mt19937_64 rng(18);
    for (int j : {2, 4, 6}) {
        const std::vector<Complex> z = jtest::random_vector(j - 1, rng);
        double zz = 0.0;
        for (const Complex& c : z) zz += std::norm(c);

        const CMatrix k = jtest::skew_block_generator(j, j, z);
        const CMatrix k2 = mat_mul(k, k);
        CMatrix odd = k;  // m = 0
        for (int mexp = 1; mexp <= 2; ++mexp) {
            odd = mat_mul(odd, k2);  // K^{2m+1}
            const CMatrix expected = scale(k, std::pow(Complex{-zz, 0.0}, mexp));
            CHECK(max_abs_diff(odd, expected) <= 1e-10);
        }
    }
}
