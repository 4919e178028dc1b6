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

#include "qeq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qeq {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::SX: return "sx";
    case GateKind::SXdg: return "sxdg";
    case GateKind::Rz: return "rz";
    case GateKind::Rx: return "rx";
    case GateKind::Ry: return "ry";
    case GateKind::U1: return "u1";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
  }
  return "?";
}

bool is_two_qubit(GateKind k) {
  return k == GateKind::CX || k == GateKind::CZ || k == GateKind::SWAP;
}

bool is_parametric(GateKind k) {
  return k == GateKind::Rz || k == GateKind::Rx || k == GateKind::Ry ||
         k == GateKind::U1;
}

Gate inverse_gate(const Gate& g) {
  Gate r = g;
  switch (g.kind) {
    case GateKind::S: r.kind = GateKind::Sdg; break;
    case GateKind::Sdg: r.kind = GateKind::S; break;
    case GateKind::T: r.kind = GateKind::Tdg; break;
    case GateKind::Tdg: r.kind = GateKind::T; break;
    case GateKind::SX: r.kind = GateKind::SXdg; break;
    case GateKind::SXdg: r.kind = GateKind::SX; break;
    case GateKind::Rz:
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::U1: r.angle = -g.angle; break;
    default: break;  // H, X, Y, Z, CX, CZ, SWAP are involutions
  }
  return r;
}

std::vector<std::uint32_t> support(const Gate& g) {
  std::vector<std::uint32_t> s{g.qubits[0]};
  if (is_two_qubit(g.kind)) s.push_back(g.qubits[1]);
  std::sort(s.begin(), s.end());
  return s;
}

void Circuit::push(const Gate& g) { gates.push_back(g); }

void validate(const Circuit& c) {
  for (const Gate& g : c.gates) {
    if (g.qubits[0] >= c.n_qubits ||
        (g.arity() == 2 && g.qubits[1] >= c.n_qubits)) {
      throw std::invalid_argument("gate qubit index out of range");
    }
    if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
      throw std::invalid_argument("two-qubit gate with repeated qubit");
    }
    if (is_parametric(g.kind) && !std::isfinite(g.angle)) {
      throw std::invalid_argument("gate angle must be finite");
    }
  }
}

std::vector<std::vector<std::size_t>> layers(const Circuit& c) {
  std::vector<std::vector<std::size_t>> result;
  std::vector<std::size_t> next_free(c.n_qubits, 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    std::size_t layer = next_free[g.qubits[0]];
    if (g.arity() == 2) layer = std::max(layer, next_free[g.qubits[1]]);
    if (layer >= result.size()) result.resize(layer + 1);
    result[layer].push_back(i);
    next_free[g.qubits[0]] = layer + 1;
    if (g.arity() == 2) next_free[g.qubits[1]] = layer + 1;
  }
  return result;
}

std::size_t depth(const Circuit& c) { return layers(c).size(); }

Circuit adjoint_circuit(const Circuit& c) {
  Circuit r(c.n_qubits);
  r.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    r.gates.push_back(inverse_gate(*it));
  }
  return r;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("concat: circuit widths differ");
  }
  Circuit r(a.n_qubits);
  r.gates.reserve(a.gates.size() + b.gates.size());
  r.gates.insert(r.gates.end(), a.gates.begin(), a.gates.end());
  r.gates.insert(r.gates.end(), b.gates.begin(), b.gates.end());
  return r;
}

}  // namespace qeq
