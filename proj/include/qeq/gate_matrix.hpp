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

#include <array>
#include <complex>

#include "qeq/circuit.hpp"
#include "qeq/dd/manager.hpp"

namespace qeq {

using Mat2 = std::array<std::complex<double>, 4>;
using Mat4 = std::array<std::complex<double>, 16>;

/// Dense entries of a single-qubit kind. Conventions:
///   Rz(t) = diag(e^{-it/2}, e^{it/2}), U1(l) = diag(1, e^{il}),
///   T = diag(1, e^{i pi/4}), SX = [[1+i, 1-i], [1-i, 1+i]] / 2.
[[nodiscard]] Mat2 gate_matrix_1q(GateKind k, double angle = 0.0);

/// Dense entries of a two-qubit kind; the first tensor factor addresses the
/// first listed qubit (for CX, the control).
[[nodiscard]] Mat4 gate_matrix_2q(GateKind k);

/// Swap the two qubit axes of a 4x4 (re-expresses the matrix with the
/// operand order reversed).
[[nodiscard]] Mat4 swap_axes(const Mat4& m);

[[nodiscard]] Mat2 adjoint2(const Mat2& m);
[[nodiscard]] Mat4 adjoint4(const Mat4& m);

/// WBDD matrix of a gate over its own qubits (2x2 or 4x4).
[[nodiscard]] dd::Diagram gate_unitary(const Gate& g, dd::Manager& mgr);

}  // namespace qeq
