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

#include "qeq/dd/complex.hpp"

namespace qeq::dd {

struct Node;

/// A weighted edge. A null target denotes the terminal; an edge whose
/// weight is (kernel-)zero always targets the terminal.
struct Edge {
  const Node* node = nullptr;
  Complex w{0.0, 0.0};

  [[nodiscard]] bool is_terminal() const { return node == nullptr; }
  [[nodiscard]] bool is_zero() const { return node == nullptr && w.exactly_zero(); }

  /// Bit-exact identity (same target, same canonical weight).
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.node == b.node && a.w == b.w;
  }

  static Edge zero() { return {nullptr, {0.0, 0.0}}; }
  static Edge terminal(Complex w) { return {nullptr, w}; }
};

/// Hash-consed diagram node. Vector nodes have 2 successors, matrix nodes 4
/// (row-major). Successors target nodes of strictly greater level or the
/// terminal; the successor of largest weight magnitude carries weight
/// exactly 1 (ties resolved toward the smallest child index).
struct Node {
  std::array<Edge, 4> child{};
  std::uint32_t var = 0;
  std::uint32_t ref = 0;  // live parent edges + user handles
  std::uint8_t arity = 4;
};

}  // namespace qeq::dd
