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

#include <stdexcept>
#include <string>

#include "jarlskog/gates.hpp"
#include "jarlskog/modules.hpp"

namespace jarlskog {

/// Raised when no explicit recipe exists at the requested dimension
/// (the Walsh-Hadamard recipes cover n = 3, 4, 5 only).
class UnsupportedDimensionError : public std::runtime_error {
  public:
    explicit UnsupportedDimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// A gate target together with a factor sequence that synthesizes it.
///
/// Sequences are stored fully expanded into primitive phase/block
/// modules; module_count counts those primitives. The provenance tag
/// identifies the published construction the recipe instantiates.
struct Recipe {
    GateId target;
    FactorSequence sequence;
    int module_count = 0;
    std::string provenance;
};

/// Single phase module {0, 2pi/n, ..., 2(n-1)pi/n}; composes to sigma3(n).
Recipe recipe_sigma3(int n);

/// Phase {0, pi, ..., pi} followed by blocks A_2..A_n, each rotating the
/// last available coordinate pair by pi/2; composes to sigma1(n) with
/// exactly n modules.
Recipe recipe_sigma1(int n);

/// Phase-plus-block product composing to k_matrix(n). The n = 2 case is
/// the empty sequence (K is already the identity there).
Recipe recipe_k(int n);

/// Exact factor sequences for the generalized Walsh-Hadamard matrix at
/// n = 3, 4, 5, with every algebraic constant evaluated at run time.
/// Other dimensions raise UnsupportedDimensionError.
Recipe recipe_walsh(int n);

struct RecipeCheck {
    double error;  // max_abs_diff(compose(sequence), direct target)
    bool pass;     // error <= 1e-11
};

RecipeCheck verify_recipe(const Recipe& r);

/// Factor-by-factor report of a recipe's composition: running unitary
/// error after each prefix and the location of the worst final mismatch.
/// Meant for diagnosing a failed verification instead of adjusting
/// constants blindly.
std::string diagnose_recipe(const Recipe& r);

}  // namespace jarlskog
