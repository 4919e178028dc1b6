// Copyright 2026 The qeq developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qeq/circuit.hpp"

namespace qeq::qasm {

/// Parse/serialize diagnostics with source position. `unsupported` flags
/// statements outside the accepted subset (measure, reset, user gate
/// definitions, conditionals, opaque declarations, unknown gates);
/// `index` flags out-of-range or unresolved qubit references.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, unsupported, index };

  ParseError(Kind kind, int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        kind_(kind),
        line_(line),
        col_(col) {}

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int col() const { return col_; }

 private:
  Kind kind_;
  int line_;
  int col_;
};

/// Parse the OpenQASM 2.0 subset used by the benchmark corpora. Multiple
/// qregs are flattened into one index space in declaration order, `creg`
/// declarations and `barrier` statements are ignored, and `ccx` expands to
/// the fixed 15-gate Clifford+T template (2 H, 7 T/Tdg, 6 CX).
[[nodiscard]] Circuit parse(std::string_view text);

/// Serialize as OpenQASM 2.0 with one flat register `q`. Angles carry 17
/// significant digits so re-parsing is bit-identical; parse(emit(c))
/// structurally equals c.
[[nodiscard]] std::string emit(const Circuit& c);

}  // namespace qeq::qasm
