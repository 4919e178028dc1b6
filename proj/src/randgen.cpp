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

#include "qeq/randgen.hpp"

#include <stdexcept>

#include "qeq/rng.hpp"

namespace qeq {

void validate(const GenProfile& p) {
  auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!in_unit(p.p_h) || !in_unit(p.p_s) || !in_unit(p.p_t) ||
      !in_unit(p.p_cnot) || !in_unit(p.p_i)) {
    throw std::invalid_argument("generator probabilities must lie in [0,1]");
  }
  if (p.p_h + p.p_s + p.p_t <= 0.0) {
    throw std::invalid_argument(
        "at least one single-qubit gate probability must be positive");
  }
}

Circuit generate(const GenProfile& profile) {
  validate(profile);
  Circuit c(profile.n_qubits);
  Xoshiro256StarStar rng(profile.seed);
  const double single_total = profile.p_h + profile.p_s + profile.p_t;
  const double cut_h = profile.p_h / single_total;
  const double cut_s = cut_h + profile.p_s / single_total;

  for (std::uint32_t layer = 0; layer < profile.depth; ++layer) {
    std::uint32_t q = 0;
    while (q < profile.n_qubits) {
      if (q + 1 < profile.n_qubits) {
        if (rng.uniform() < profile.p_cnot) {
          c.push(Gate(GateKind::CX, q, q + 1));
          q += 2;
          continue;
        }
      }
      if (rng.uniform() < profile.p_i) {
        ++q;
        continue;
      }
      const double w = rng.uniform();
      if (w < cut_h) {
        c.push(Gate(GateKind::H, q));
      } else if (w < cut_s) {
        c.push(Gate(GateKind::S, q));
      } else {
        c.push(Gate(GateKind::T, q));
      }
      ++q;
    }
  }
  return c;
}

}  // namespace qeq
