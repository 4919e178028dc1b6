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
#include <cstdint>
#include <string>
#include <vector>

namespace qeq {

/// Closed gate vocabulary. Parametric kinds carry exactly one finite angle
/// in radians. SXdg exists so circuit adjoints stay length-preserving; it
/// serializes as `sxdg`.
enum class GateKind : std::uint8_t {
  H,
  S,
  Sdg,
  T,
  Tdg,
  X,
  Y,
  Z,
  SX,
  SXdg,
  Rz,
  Rx,
  Ry,
  U1,
  CX,
  CZ,
  SWAP,
};

[[nodiscard]] const char* gate_name(GateKind k);
[[nodiscard]] bool is_two_qubit(GateKind k);
[[nodiscard]] bool is_parametric(GateKind k);

struct Gate {
  GateKind kind;
  std::array<std::uint32_t, 2> qubits{0, 0};
  double angle = 0.0;

  Gate(GateKind k, std::uint32_t q) : kind(k), qubits{q, 0} {}
  Gate(GateKind k, std::uint32_t q, double theta)
      : kind(k), qubits{q, 0}, angle(theta) {}
  /// Two-qubit constructor; for CX, q0 is the control.
  Gate(GateKind k, std::uint32_t q0, std::uint32_t q1)
      : kind(k), qubits{q0, q1} {}

  [[nodiscard]] std::uint32_t arity() const {
    return is_two_qubit(kind) ? 2 : 1;
  }

  /// Angles compare exactly; numerical tolerance lives in the kernel only.
  friend bool operator==(const Gate& a, const Gate& b) {
    if (a.kind != b.kind || a.qubits[0] != b.qubits[0]) return false;
    if (is_two_qubit(a.kind) && a.qubits[1] != b.qubits[1]) return false;
    if (is_parametric(a.kind) && a.angle != b.angle) return false;
    return true;
  }
};

/// Inverse gate (S<->Sdg, T<->Tdg, SX<->SXdg, angles negated, self-inverse
/// kinds unchanged).
[[nodiscard]] Gate inverse_gate(const Gate& g);

/// The gate's qubit set.
[[nodiscard]] std::vector<std::uint32_t> support(const Gate& g);

/// Ordered gate list over a fixed register width; first gate applies first.
/// Immutable by convention after construction.
struct Circuit {
  std::uint32_t n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::uint32_t n) : n_qubits(n) {}
  Circuit(std::uint32_t n, std::vector<Gate> gs)
      : n_qubits(n), gates(std::move(gs)) {}

  void push(const Gate& g);

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.n_qubits == b.n_qubits && a.gates == b.gates;
  }
};

/// Throws std::invalid_argument if any gate is out of range or has repeated
/// qubits.
void validate(const Circuit& c);

/// Greedy ASAP layering: each gate lands in the earliest layer where all of
/// its qubits are free. Returns gate indices per layer; size() is the depth.
[[nodiscard]] std::vector<std::vector<std::size_t>> layers(const Circuit& c);

[[nodiscard]] std::size_t depth(const Circuit& c);

/// Gates reversed and inverted; the unitary is the conjugate transpose.
[[nodiscard]] Circuit adjoint_circuit(const Circuit& c);

/// a's gates followed by b's; widths must match.
[[nodiscard]] Circuit concat(const Circuit& a, const Circuit& b);

}  // namespace qeq
