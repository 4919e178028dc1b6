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

#include "qeq/circuit.hpp"

namespace qeq {

/// Peephole rewriter whose every rule is an exact identity, so the output
/// is equivalent to the input with no phase slip. Applied until fixpoint or
/// the pass limit:
///   - cancel adjacent inverse pairs on identical qubit tuples
///     (H H, S Sdg, T Tdg, X X, Z Z, CX CX, CZ CZ, SWAP SWAP);
///   - fuse T T -> S, Tdg Tdg -> Sdg, S S -> Z;
///   - merge Rz(a) Rz(b) -> Rz(a+b) and drop Rz(0) / U1(0);
///   - reorder commuting adjacent gates with disjoint supports into
///     canonical order (sort key: smallest qubit index).
[[nodiscard]] Circuit optimize(const Circuit& c, int passes);

}  // namespace qeq
