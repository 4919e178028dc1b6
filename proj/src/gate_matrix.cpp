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

#include "qeq/gate_matrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qeq {

namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

Mat2 gate_matrix_1q(GateKind k, double angle) {
  switch (k) {
    case GateKind::H:
      return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case GateKind::S:
      return {1.0, 0.0, 0.0, kI};
    case GateKind::Sdg:
      return {1.0, 0.0, 0.0, -kI};
    case GateKind::T:
      return {1.0, 0.0, 0.0, std::exp(kI * (std::numbers::pi / 4.0))};
    case GateKind::Tdg:
      return {1.0, 0.0, 0.0, std::exp(-kI * (std::numbers::pi / 4.0))};
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y:
      return {0.0, -kI, kI, 0.0};
    case GateKind::Z:
      return {1.0, 0.0, 0.0, -1.0};
    case GateKind::SX:
      return {C{0.5, 0.5}, C{0.5, -0.5}, C{0.5, -0.5}, C{0.5, 0.5}};
    case GateKind::SXdg:
      return {C{0.5, -0.5}, C{0.5, 0.5}, C{0.5, 0.5}, C{0.5, -0.5}};
    case GateKind::Rz:
      return {std::exp(-kI * (angle / 2.0)), 0.0, 0.0,
              std::exp(kI * (angle / 2.0))};
    case GateKind::Rx: {
      const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
      return {c, -kI * s, -kI * s, c};
    }
    case GateKind::Ry: {
      const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
      return {c, -s, s, c};
    }
    case GateKind::U1:
      return {1.0, 0.0, 0.0, std::exp(kI * angle)};
    default:
      throw std::invalid_argument("gate_matrix_1q: two-qubit kind");
  }
}

Mat4 gate_matrix_2q(GateKind k) {
  switch (k) {
    case GateKind::CX:
      // control on the first (upper) qubit: swaps rows 2 and 3
      return {1, 0, 0, 0,  //
              0, 1, 0, 0,  //
              0, 0, 0, 1,  //
              0, 0, 1, 0};
    case GateKind::CZ:
      return {1, 0, 0, 0,  //
              0, 1, 0, 0,  //
              0, 0, 1, 0,  //
              0, 0, 0, -1};
    case GateKind::SWAP:
      return {1, 0, 0, 0,  //
              0, 0, 1, 0,  //
              0, 1, 0, 0,  //
              0, 0, 0, 1};
    default:
      throw std::invalid_argument("gate_matrix_2q: single-qubit kind");
  }
}

Mat4 swap_axes(const Mat4& m) {
  Mat4 r{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          r[(2 * b + a) * 4 + (2 * d + c)] = m[(2 * a + b) * 4 + (2 * c + d)];
  return r;
}

Mat2 adjoint2(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

Mat4 adjoint4(const Mat4& m) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i * 4 + j] = std::conj(m[j * 4 + i]);
  return r;
}

dd::Diagram gate_unitary(const Gate& g, dd::Manager& mgr) {
  if (is_two_qubit(g.kind)) {
    const Mat4 m = gate_matrix_2q(g.kind);
    return mgr.make_matrix(std::span<const std::complex<double>>(m));
  }
  const Mat2 m = gate_matrix_1q(g.kind, g.angle);
  return mgr.make_matrix(std::span<const std::complex<double>>(m));
}

}  // namespace qeq
