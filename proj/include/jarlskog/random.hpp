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

#include <random>

#include "jarlskog/cmatrix.hpp"

namespace jarlskog {

/// Haar-distributed random unitary: a matrix of independent standard
/// complex Gaussians, orthonormalized column-by-column with a second
/// reorthogonalization pass. Deterministic for a given generator state.
CMatrix haar_random_unitary(int n, std::mt19937_64& rng);

/// Convenience overload seeding a fresh generator.
CMatrix haar_random_unitary(int n, unsigned long long seed);

}  // namespace jarlskog
