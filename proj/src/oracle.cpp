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

#include "qeq/oracle.hpp"

#include <stdexcept>

#include "qeq/gate_matrix.hpp"

namespace qeq::oracle {

namespace {

using C = std::complex<double>;

// Applies U_g (embedded on the full register) from the left to each column
// of a row-major 2^n x width buffer. Level 0 is the most significant index
// bit.
void apply_gate(std::vector<C>& m, std::uint32_t n, std::size_t width,
                const Gate& g) {
  const std::size_t dim = std::size_t{1} << n;
  if (g.arity() == 1) {
    const Mat2 u = gate_matrix_1q(g.kind, g.angle);
    const std::size_t stride = dim >> (g.qubits[0] + 1);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t r0 = base + off;
        const std::size_t r1 = r0 + stride;
        for (std::size_t col = 0; col < width; ++col) {
          const C x = m[r0 * width + col];
          const C y = m[r1 * width + col];
          m[r0 * width + col] = u[0] * x + u[1] * y;
          m[r1 * width + col] = u[2] * x + u[3] * y;
        }
      }
    }
    return;
  }
  const Mat4 u = gate_matrix_2q(g.kind);
  const std::size_t s0 = dim >> (g.qubits[0] + 1);
  const std::size_t s1 = dim >> (g.qubits[1] + 1);
  for (std::size_t r = 0; r < dim; ++r) {
    if ((r & s0) != 0 || (r & s1) != 0) continue;
    const std::size_t rows[4] = {r, r + s1, r + s0, r + s0 + s1};
    for (std::size_t col = 0; col < width; ++col) {
      C x[4];
      for (int i = 0; i < 4; ++i) x[i] = m[rows[i] * width + col];
      for (int i = 0; i < 4; ++i) {
        C acc = 0.0;
        for (int j = 0; j < 4; ++j) acc += u[i * 4 + j] * x[j];
        m[rows[i] * width + col] = acc;
      }
    }
  }
}

void check_width(const Circuit& c) {
  if (c.n_qubits > kMaxQubits) {
    throw std::invalid_argument("oracle: circuit exceeds the dense width cap");
  }
  validate(c);
}

}  // namespace

std::vector<C> dense_unitary(const Circuit& c) {
  check_width(c);
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  std::vector<C> m(dim * dim, C{0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  for (const Gate& g : c.gates) apply_gate(m, c.n_qubits, dim, g);
  return m;
}

std::vector<C> dense_state(const Circuit& c) {
  check_width(c);
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  std::vector<C> v(dim, C{0.0, 0.0});
  v[0] = 1.0;
  for (const Gate& g : c.gates) apply_gate(v, c.n_qubits, 1, g);
  return v;
}

bool oracle_equivalent(const Circuit& c0, const Circuit& c1, double tol) {
  if (c0.n_qubits != c1.n_qubits) {
    throw std::invalid_argument("oracle_equivalent: circuit widths differ");
  }
  // M = U1^dagger * U0, accumulated gate by gate
  const std::vector<C> m = dense_unitary(concat(c0, adjoint_circuit(c1)));
  const std::size_t dim = std::size_t{1} << c0.n_qubits;
  const C phase = m[0];
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const C v = m[r * dim + c];
      if (r == c) {
        if (std::abs(v - phase) > tol) return false;
      } else if (std::abs(v) > tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qeq::oracle
