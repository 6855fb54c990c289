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

#include "jarlskog/modules.hpp"

namespace jarlskog {

/// Input rejected because it is not unitary within tolerance; carries
/// the measured unitary error.
class NonUnitaryError : public std::runtime_error {
  public:
    explicit NonUnitaryError(double measured);
    double measured() const { return measured_; }

  private:
    double measured_;
};

/// One phase factor followed by blocks j = 2..n, plus the round-trip
/// max-abs error of recomposing the sequence against the input.
struct DecompositionResult {
    FactorSequence sequence;
    double residual = 0.0;
};

/// Factor a unitary into modules by recursive peeling of the last row.
///
/// Because every block with index below n leaves coordinate n alone, the
/// last row of U determines the final block's parameters directly:
/// beta_n = arccos|U_nn| in [0, pi/2] and theta_n = arg U_nn. Stripping
/// that block off and recursing on the leading submatrix yields the rest;
/// the peeled phases land in coordinate order in one leading phase factor.
///
/// Requires unitary_error(u) <= 1e-10, else NonUnitaryError. Residual is
/// <= 1e-9 for any valid input up to n = 16.
DecompositionResult decompose(const CMatrix& u);

/// max_abs_diff(compose_sequence(decompose(u).sequence), u).
double roundtrip_error(const CMatrix& u);

}  // namespace jarlskog
