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

#include "jarlskog/random.hpp"

#include <cmath>
#include <stdexcept>

namespace jarlskog {

CMatrix haar_random_unitary(int n, std::mt19937_64& rng) {
    if (n < 1) {
        throw std::invalid_argument("haar_random_unitary: dimension must be >= 1");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix m(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m(r, c) = Complex{gauss(rng), gauss(rng)};
    }
    // Column-wise Gram-Schmidt with one reorthogonalization pass.
    for (int c = 0; c < n; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int prev = 0; prev < c; ++prev) {
                Complex proj{0.0, 0.0};
                for (int r = 0; r < n; ++r) proj += std::conj(m(r, prev)) * m(r, c);
                for (int r = 0; r < n; ++r) m(r, c) -= proj * m(r, prev);
            }
        }
        double nrm = 0.0;
        for (int r = 0; r < n; ++r) nrm += std::norm(m(r, c));
        nrm = std::sqrt(nrm);
        for (int r = 0; r < n; ++r) m(r, c) /= nrm;
    }
    return m;
}

CMatrix haar_random_unitary(int n, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    return haar_random_unitary(n, rng);
}

}  // namespace jarlskog
