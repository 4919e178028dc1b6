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
#include <chrono>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qeq/dd/complex.hpp"
#include "qeq/dd/node.hpp"
#include "qeq/errors.hpp"

namespace qeq::dd {

class Manager;

/// Owning handle to a canonical diagram. Copies share the underlying node
/// and keep it alive across garbage collections. A handle is bound to the
/// manager that built it; handles from different managers never mix.
class Diagram {
 public:
  Diagram() = default;
  Diagram(const Diagram& other);
  Diagram(Diagram&& other) noexcept;
  Diagram& operator=(const Diagram& other);
  Diagram& operator=(Diagram&& other) noexcept;
  ~Diagram();

  [[nodiscard]] std::uint32_t levels() const { return levels_; }
  [[nodiscard]] bool is_matrix() const { return matrix_; }
  [[nodiscard]] bool is_zero() const { return edge_.is_zero(); }
  [[nodiscard]] Complex weight() const { return edge_.w; }
  [[nodiscard]] const Edge& edge() const { return edge_; }
  [[nodiscard]] Manager* manager() const { return mgr_; }

  /// Bit-exact identity of root edges — the canonicity test.
  [[nodiscard]] bool same_edge(const Diagram& other) const {
    return edge_ == other.edge_;
  }

 private:
  friend class Manager;
  Diagram(Manager* mgr, Edge e, std::uint32_t levels, bool matrix);

  Manager* mgr_ = nullptr;
  Edge edge_ = Edge::zero();
  std::uint32_t levels_ = 0;
  bool matrix_ = true;
};

using Mat2 = std::array<std::complex<double>, 4>;    // row-major 2x2
using Mat4 = std::array<std::complex<double>, 16>;   // row-major 4x4

/// Weighted-decision-diagram kernel over qubit levels: hash-consed nodes,
/// canonical normalization (largest-magnitude successor weight is exactly 1,
/// factor pushed to the incoming edge), weights canonicalized through a
/// tolerance-bucketed table, and cached arithmetic.
///
/// Level 0 is qubit 0 and is the most significant bit of a dense index
/// (big-endian). A manager and every diagram it owns are confined to one
/// thread at a time; independent managers may run in parallel.
class Manager {
 public:
  struct Config {
    /// Kernel tolerance (epsilon_ct): weights within this componentwise
    /// distance are identified during hash-consing.
    double eps = 1e-13;
    /// Live-node budget; 0 means unlimited. Exceeding it throws
    /// ResourceLimitError(nodes).
    std::size_t max_nodes = 0;
    /// to_dense refuses diagrams above this many levels.
    std::uint32_t dense_cap_levels = 12;
  };

  explicit Manager(Config cfg = {});
  explicit Manager(double eps) : Manager(Config{.eps = eps}) {}
  ~Manager();

  Manager(const Manager&) = delete;
  Manager& operator=(const Manager&) = delete;

  [[nodiscard]] double tolerance() const { return cfg_.eps; }

  // -- construction -------------------------------------------------------

  /// Build a vector diagram from 2^k dense amplitudes.
  Diagram make_vector(std::span<const std::complex<double>> entries);
  /// Build a matrix diagram from 4^k row-major dense entries.
  Diagram make_matrix(std::span<const std::complex<double>> entries);
  Diagram identity(std::uint32_t levels);
  Diagram zero_matrix(std::uint32_t levels);
  Diagram zero_vector(std::uint32_t levels);

  /// Matrix with `mat` acting on `level` and identity elsewhere.
  Diagram embed_one_qubit(const Mat2& mat, std::uint32_t level,
                          std::uint32_t width);
  /// Matrix with `mat` acting on levels (la, lb), la < lb, identity
  /// elsewhere. The first tensor factor of `mat` addresses level la.
  Diagram embed_two_qubit(const Mat4& mat, std::uint32_t la, std::uint32_t lb,
                          std::uint32_t width);
  /// Insert an identity-acted level at position `pos` (0..levels), shifting
  /// deeper levels down by one.
  Diagram insert_identity_level(const Diagram& a, std::uint32_t pos);

  /// Rebuild a diagram owned by another manager inside this one.
  Diagram import(const Diagram& other);

  // -- arithmetic ----------------------------------------------------------

  Diagram add(const Diagram& a, const Diagram& b);
  Diagram mul(const Diagram& a, const Diagram& b);  // m*m or m*v
  Diagram kron(const Diagram& a, const Diagram& b);
  Diagram adjoint(const Diagram& a);
  Diagram scalar_mul(const std::complex<double>& s, const Diagram& a);

  /// Sup-norm of the entrywise difference, exact on the diagram structure;
  /// returns exactly 0 iff the root edges are identical.
  double max_abs_diff(const Diagram& a, const Diagram& b);

  // -- export --------------------------------------------------------------

  std::vector<std::complex<double>> to_dense(const Diagram& a);
  /// Deterministic text form (levels, child references, weights to 17
  /// significant digits) for golden tests.
  std::string dump(const Diagram& a);

  // -- resources -----------------------------------------------------------

  [[nodiscard]] std::size_t live_nodes() const { return alive_; }
  [[nodiscard]] std::size_t peak_nodes() const { return peak_alive_; }
  void set_deadline(std::optional<std::chrono::steady_clock::time_point> d) {
    deadline_ = d;
  }
  /// Drop all nodes unreachable from live handles and purge the operation
  /// caches. Purging is observationally invisible.
  void collect_garbage();

 private:
  friend class Diagram;

  enum class Op : std::uint8_t {
    add,
    mul,
    attach,
    shift,
    insert,
    adjoint,
    import,
  };

  struct CacheKey {
    Op op;
    const Node* a;
    const Node* b;
    std::uint64_t wa_re, wa_im, wb_re, wb_im;
    std::uint32_t aux;
    bool operator==(const CacheKey& o) const {
      return op == o.op && a == o.a && b == o.b && wa_re == o.wa_re &&
             wa_im == o.wa_im && wb_re == o.wb_re && wb_im == o.wb_im &&
             aux == o.aux;
    }
  };
  struct CacheKeyHash {
    std::size_t operator()(const CacheKey& k) const;
  };

  // weight canonicalization
  Complex snap(Complex c);
  Edge terminal_weight(Complex w);

  // node construction (normalizes, hash-conses, enforces budgets)
  Edge make_node(std::uint32_t var, std::uint8_t arity,
                 std::array<Edge, 4> children);
  Node* alloc_node();
  void check_deadline();

  // recursive kernels (operate on plain edges; no GC may run mid-recursion)
  Edge add_edges(Edge a, Edge b);
  Edge mul_edges(Edge a, Edge b);
  Edge attach_edges(Edge a, Edge b);       // kron: replace a's terminals by b
  Edge shift_edge(Edge e, std::uint32_t delta);
  Edge insert_edge(Edge e, std::uint32_t pos, std::uint32_t levels);
  Edge adjoint_edge(Edge e);
  Edge import_edge(const Manager& src, Edge e);
  Edge identity_chain(std::uint32_t from, std::uint32_t to);
  Edge build_vector(std::span<const std::complex<double>> v, std::uint32_t var,
                    std::size_t row0, std::size_t size);
  Edge build_matrix(std::span<const std::complex<double>> m, std::uint32_t var,
                    std::size_t full, std::size_t row0, std::size_t col0,
                    std::size_t size);
  double max_abs_edge(Edge e,
                      std::unordered_map<const Node*, double>& memo) const;
  void fill_dense(Edge e, std::size_t full, std::size_t row, std::size_t col,
                  Complex acc, std::vector<std::complex<double>>& out,
                  bool matrix) const;

  void inc_ref(const Node* n);
  void dec_ref(const Node* n);
  void maybe_collect();
  Diagram rooted(Edge e, std::uint32_t levels, bool matrix);

  Config cfg_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;

  // tolerance-bucketed canonical weights: bucket = floor(value/eps) per
  // component, lookup probes the 3x3 neighborhood
  std::unordered_map<std::uint64_t, std::vector<Complex>> weight_buckets_;

  std::vector<std::unordered_multimap<std::size_t, Node*>> unique_;  // per var
  std::unordered_map<CacheKey, Edge, CacheKeyHash> cache_;

  std::deque<Node> arena_;
  std::vector<Node*> free_;
  std::size_t alive_ = 0;
  std::size_t peak_alive_ = 0;
  std::size_t gc_watermark_;
  std::uint32_t alloc_tick_ = 0;
};

}  // namespace qeq::dd
