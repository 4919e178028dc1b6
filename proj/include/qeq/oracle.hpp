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

#include <complex>
#include <vector>

#include "qeq/circuit.hpp"

namespace qeq::oracle {

/// Width cap for the dense path; this module exists to be obviously
/// correct, not fast.
inline constexpr std::uint32_t kMaxQubits = 12;

/// Full 2^n x 2^n unitary of the circuit (row-major, big-endian qubit
/// order, gates applied first to last).
[[nodiscard]] std::vector<std::complex<double>> dense_unitary(
    const Circuit& c);

/// Output state U|0...0>.
[[nodiscard]] std::vector<std::complex<double>> dense_state(const Circuit& c);

/// Ground-truth circuit equivalence up to global phase: forms
/// M = U1^dagger * U0 and tests proportionality to the identity entrywise
/// (off-diagonals within tol of zero, diagonals within tol of M[0][0]).
[[nodiscard]] bool oracle_equivalent(const Circuit& c0, const Circuit& c1,
                                     double tol);

}  // namespace qeq::oracle
