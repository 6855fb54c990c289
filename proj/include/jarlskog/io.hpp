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

#include <optional>
#include <stdexcept>
#include <string>

#include "jarlskog/modules.hpp"

namespace jarlskog {

// JSON file formats.
//
// Matrix file:
//   {"n": <int>, "re": [[row-major doubles]], "im": [[row-major doubles]]}
// with both arrays n rows by n columns.
//
// Factor file:
//   {"n": <int>, "factors": [
//       {"kind": "phase", "thetas": [..]}
//     | {"kind": "block", "j": <int>, "z_re": [..], "z_im": [..], "beta": <double>}
//   ]}
// with array order equal to composition order (leftmost factor first).
// Recipe files add "target" and "provenance"; decomposition output adds
// "residual". Readers ignore fields they do not know.
//
// Doubles are emitted with 17 significant digits, so writing is
// deterministic and reading recovers every double bit-exactly.

/// Malformed or invalid input file.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Optional header fields carried by factor files.
struct FactorFileMeta {
    std::optional<std::string> target;
    std::optional<std::string> provenance;
    std::optional<double> residual;
};

std::string matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const std::string& text);

std::string factors_to_json(const FactorSequence& seq, const FactorFileMeta& meta = {});

struct FactorFile {
    FactorSequence sequence;
    FactorFileMeta meta;
};

FactorFile factors_from_json(const std::string& text);

void save_matrix(const std::string& path, const CMatrix& m);
CMatrix load_matrix(const std::string& path);

void save_factors(const std::string& path, const FactorSequence& seq,
                  const FactorFileMeta& meta = {});
FactorFile load_factors(const std::string& path);

}  // namespace jarlskog
