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

#include "qeq/circuit.hpp"

namespace qeq {

/// Sampling profile for random 1D Clifford+T circuits. The defaults are the
/// standard gate-density mix: H 35%, S 35%, CNOT 10%, T 20%, no identities.
struct GenProfile {
  double p_h = 0.35;
  double p_s = 0.35;
  double p_t = 0.20;
  double p_cnot = 0.10;
  double p_i = 0.0;
  std::uint32_t n_qubits = 0;
  std::uint32_t depth = 0;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on out-of-range probabilities or
/// p_h + p_s + p_t == 0.
void validate(const GenProfile& p);

/// Layer-by-layer sampler. Each layer scans q = 0,1,... left to right and
/// consumes a fixed draw sequence so circuits reproduce across
/// implementations:
///   1. if q < n-1, draw u: u < p_cnot emits CX(q, q+1) and advances by two
///      (the CNOT attempt is skipped at the last position, so its
///      probability mass flows to the remaining branches there);
///   2. draw v: v < p_i places no gate and advances by one;
///   3. draw w: pick H/S/T by cumulative weights normalized over
///      (p_h, p_s, p_t) and advance by one.
/// All two-qubit gates are adjacent-index CX, so every layer acts on
/// pairwise-disjoint qubits.
[[nodiscard]] Circuit generate(const GenProfile& profile);

}  // namespace qeq
