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

#include "qeq/dd/manager.hpp"

#include <algorithm>
#include <cassert>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace qeq::dd {

namespace {

constexpr std::size_t kMinGcWatermark = std::size_t{1} << 16;

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t bits(double d) {
  std::uint64_t u;
  std::memcpy(&u, &d, sizeof(u));
  return u;
}

inline std::size_t node_hash(std::uint32_t var, std::uint8_t arity,
                             const std::array<Edge, 4>& ch) {
  std::uint64_t h = mix64((std::uint64_t{var} << 8) | arity);
  for (int i = 0; i < arity; ++i) {
    h = mix64(h ^ reinterpret_cast<std::uintptr_t>(ch[i].node));
    h = mix64(h ^ bits(ch[i].w.re));
    h = mix64(h ^ bits(ch[i].w.im));
  }
  return static_cast<std::size_t>(h);
}

inline std::uint64_t bucket_key(std::int64_t bx, std::int64_t by) {
  return mix64(static_cast<std::uint64_t>(bx) * 0x9e3779b97f4a7c15ULL ^
               static_cast<std::uint64_t>(by));
}

// (row-major) ordering of operands for commutative cache keys
inline bool edge_less(const Edge& a, const Edge& b) {
  if (a.node != b.node) return a.node < b.node;
  if (a.w.re != b.w.re) return a.w.re < b.w.re;
  return a.w.im < b.w.im;
}

void format_complex(std::string& out, const Complex& c) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g", c.re, c.im);
  out += buf;
}

}  // namespace

std::size_t Manager::CacheKeyHash::operator()(const CacheKey& k) const {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(k.op));
  h = mix64(h ^ reinterpret_cast<std::uintptr_t>(k.a));
  h = mix64(h ^ reinterpret_cast<std::uintptr_t>(k.b));
  h = mix64(h ^ k.wa_re);
  h = mix64(h ^ k.wa_im);
  h = mix64(h ^ k.wb_re);
  h = mix64(h ^ k.wb_im);
  h = mix64(h ^ k.aux);
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// Diagram handle

Diagram::Diagram(Manager* mgr, Edge e, std::uint32_t levels, bool matrix)
    : mgr_(mgr), edge_(e), levels_(levels), matrix_(matrix) {
  if (mgr_ != nullptr) mgr_->inc_ref(edge_.node);
}

Diagram::Diagram(const Diagram& other)
    : mgr_(other.mgr_),
      edge_(other.edge_),
      levels_(other.levels_),
      matrix_(other.matrix_) {
  if (mgr_ != nullptr) mgr_->inc_ref(edge_.node);
}

Diagram::Diagram(Diagram&& other) noexcept
    : mgr_(other.mgr_),
      edge_(other.edge_),
      levels_(other.levels_),
      matrix_(other.matrix_) {
  other.mgr_ = nullptr;
  other.edge_ = Edge::zero();
}

Diagram& Diagram::operator=(const Diagram& other) {
  if (this == &other) return *this;
  if (other.mgr_ != nullptr) other.mgr_->inc_ref(other.edge_.node);
  if (mgr_ != nullptr) mgr_->dec_ref(edge_.node);
  mgr_ = other.mgr_;
  edge_ = other.edge_;
  levels_ = other.levels_;
  matrix_ = other.matrix_;
  return *this;
}

Diagram& Diagram::operator=(Diagram&& other) noexcept {
  if (this == &other) return *this;
  if (mgr_ != nullptr) mgr_->dec_ref(edge_.node);
  mgr_ = other.mgr_;
  edge_ = other.edge_;
  levels_ = other.levels_;
  matrix_ = other.matrix_;
  other.mgr_ = nullptr;
  other.edge_ = Edge::zero();
  return *this;
}

Diagram::~Diagram() {
  if (mgr_ != nullptr) mgr_->dec_ref(edge_.node);
}

// ---------------------------------------------------------------------------
// Manager lifecycle

Manager::Manager(Config cfg) : cfg_(cfg), gc_watermark_(kMinGcWatermark) {
  if (!(cfg_.eps > 0.0) || !std::isfinite(cfg_.eps)) {
    throw std::invalid_argument("kernel tolerance must be positive and finite");
  }
}

Manager::~Manager() = default;

void Manager::inc_ref(const Node* n) {
  if (n != nullptr) ++const_cast<Node*>(n)->ref;
}

void Manager::dec_ref(const Node* n) {
  if (n != nullptr) {
    assert(n->ref > 0);
    --const_cast<Node*>(n)->ref;
  }
}

void Manager::collect_garbage() {
  cache_.clear();
  // children live at strictly greater levels, so one ascending sweep
  // completes every cascade
  for (auto& table : unique_) {
    for (auto it = table.begin(); it != table.end();) {
      Node* n = it->second;
      if (n->ref == 0) {
        for (int i = 0; i < n->arity; ++i) dec_ref(n->child[i].node);
        free_.push_back(n);
        --alive_;
        it = table.erase(it);
      } else {
        ++it;
      }
    }
  }
}

void Manager::maybe_collect() {
  check_deadline();
  const bool near_budget =
      cfg_.max_nodes != 0 && alive_ > cfg_.max_nodes / 2;
  if (alive_ > gc_watermark_ || near_budget) {
    collect_garbage();
    gc_watermark_ = std::max(kMinGcWatermark, alive_ * 2);
  }
}

void Manager::check_deadline() {
  if (deadline_ && std::chrono::steady_clock::now() > *deadline_) {
    throw ResourceLimitError(ResourceLimitError::Kind::time,
                             "propagation wall-clock budget exhausted");
  }
}

Node* Manager::alloc_node() {
  if (cfg_.max_nodes != 0 && alive_ >= cfg_.max_nodes) {
    throw ResourceLimitError(ResourceLimitError::Kind::nodes,
                             "node budget exhausted");
  }
  if ((++alloc_tick_ & 0x7ffU) == 0) check_deadline();
  Node* n;
  if (!free_.empty()) {
    n = free_.back();
    free_.pop_back();
  } else {
    arena_.emplace_back();
    n = &arena_.back();
  }
  ++alive_;
  peak_alive_ = std::max(peak_alive_, alive_);
  return n;
}

Diagram Manager::rooted(Edge e, std::uint32_t levels, bool matrix) {
  return Diagram(this, e, levels, matrix);
}

// ---------------------------------------------------------------------------
// Weight canonicalization

Complex Manager::snap(Complex c) {
  if (!c.finite()) {
    throw std::invalid_argument("non-finite value in diagram construction");
  }
  const double eps = cfg_.eps;
  if (approx_zero(c, eps)) return {0.0, 0.0};
  const double sx = c.re / eps;
  const double sy = c.im / eps;
  if (std::fabs(sx) > 9e15 || std::fabs(sy) > 9e15) return c;  // off the grid
  const auto bx = static_cast<std::int64_t>(std::floor(sx));
  const auto by = static_cast<std::int64_t>(std::floor(sy));
  for (std::int64_t dx = -1; dx <= 1; ++dx) {
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      auto it = weight_buckets_.find(bucket_key(bx + dx, by + dy));
      if (it == weight_buckets_.end()) continue;
      for (const Complex& v : it->second) {
        if (approx_equal(v, c, eps)) return v;
      }
    }
  }
  weight_buckets_[bucket_key(bx, by)].push_back(c);
  return c;
}

Edge Manager::terminal_weight(Complex w) {
  return Edge::terminal(snap(w));
}

// ---------------------------------------------------------------------------
// Node construction

Edge Manager::make_node(std::uint32_t var, std::uint8_t arity,
                        std::array<Edge, 4> ch) {
  for (int i = arity; i < 4; ++i) ch[i] = Edge::zero();
  int pivot = -1;
  double best = 0.0;
  for (int i = 0; i < arity; ++i) {
    if (!ch[i].w.finite()) {
      throw std::invalid_argument("non-finite value in diagram construction");
    }
    if (approx_zero(ch[i].w, cfg_.eps)) {
      ch[i] = Edge::zero();
      continue;
    }
    const double m = abs2(ch[i].w);
    if (pivot < 0 || m > best) {
      pivot = i;
      best = m;
    }
  }
  if (pivot < 0) return Edge::zero();

  const Complex wp = ch[pivot].w;
  for (int i = 0; i < arity; ++i) {
    if (i == pivot || ch[i].is_zero()) continue;
    const Complex q = snap(ch[i].w / wp);
    if (q.exactly_zero()) {
      ch[i] = Edge::zero();
    } else {
      ch[i].w = q;
    }
  }
  ch[pivot].w = {1.0, 0.0};

  const std::size_t h = node_hash(var, arity, ch);
  if (unique_.size() <= var) unique_.resize(var + 1);
  auto& table = unique_[var];
  auto [lo, hi] = table.equal_range(h);
  for (auto it = lo; it != hi; ++it) {
    const Node* n = it->second;
    if (n->arity == arity && n->child == ch) return {n, snap(wp)};
  }
  Node* n = alloc_node();
  n->var = var;
  n->arity = arity;
  n->ref = 0;
  n->child = ch;
  for (int i = 0; i < arity; ++i) inc_ref(n->child[i].node);
  table.emplace(h, n);
  return {n, snap(wp)};
}

// ---------------------------------------------------------------------------
// Recursive kernels

Edge Manager::add_edges(Edge a, Edge b) {
  if (a.w.exactly_zero()) return b;
  if (b.w.exactly_zero()) return a;
  if (a.node == nullptr && b.node == nullptr) {
    return terminal_weight(a.w + b.w);
  }
  assert(a.node != nullptr && b.node != nullptr);
  assert(a.node->var == b.node->var && a.node->arity == b.node->arity);
  if (a.node == b.node) {
    const Complex s = snap(a.w + b.w);
    if (s.exactly_zero()) return Edge::zero();
    return {a.node, s};
  }
  if (edge_less(b, a)) std::swap(a, b);
  CacheKey key{Op::add,     a.node,       b.node,       bits(a.w.re),
               bits(a.w.im), bits(b.w.re), bits(b.w.im), 0};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const std::uint8_t arity = a.node->arity;
  std::array<Edge, 4> c{};
  for (int i = 0; i < arity; ++i) {
    const Edge& ca = a.node->child[i];
    const Edge& cb = b.node->child[i];
    c[i] = add_edges({ca.node, a.w * ca.w}, {cb.node, b.w * cb.w});
  }
  const Edge r = make_node(a.node->var, arity, c);
  cache_.emplace(key, r);
  return r;
}

Edge Manager::mul_edges(Edge a, Edge b) {
  if (a.w.exactly_zero() || b.w.exactly_zero()) return Edge::zero();
  if (a.node == nullptr && b.node == nullptr) {
    return terminal_weight(a.w * b.w);
  }
  assert(a.node != nullptr && b.node != nullptr);
  assert(a.node->var == b.node->var);
  assert(a.node->arity == 4);

  CacheKey key{Op::mul, a.node, b.node, 0, 0, 0, 0, 0};
  Edge r;
  if (auto it = cache_.find(key); it != cache_.end()) {
    r = it->second;
  } else {
    const bool vec = b.node->arity == 2;
    std::array<Edge, 4> c{};
    if (vec) {
      for (int i = 0; i < 2; ++i) {
        c[i] = add_edges(mul_edges(a.node->child[2 * i], b.node->child[0]),
                         mul_edges(a.node->child[2 * i + 1], b.node->child[1]));
      }
    } else {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          c[2 * i + j] =
              add_edges(mul_edges(a.node->child[2 * i], b.node->child[j]),
                        mul_edges(a.node->child[2 * i + 1],
                                  b.node->child[2 + j]));
        }
      }
    }
    r = make_node(a.node->var, vec ? 2 : 4, c);
    cache_.emplace(key, r);
  }
  return {r.node, snap(a.w * b.w * r.w)};
}

Edge Manager::attach_edges(Edge a, Edge b) {
  // kron helper: b is already shifted below a's levels and carries unit
  // weight; replaces a's terminal amplitudes by b
  if (a.w.exactly_zero()) return Edge::zero();
  if (a.node == nullptr) return {b.node, a.w};
  CacheKey key{Op::attach, a.node, b.node, 0, 0, 0, 0, 0};
  Edge r;
  if (auto it = cache_.find(key); it != cache_.end()) {
    r = it->second;
  } else {
    const std::uint8_t arity = a.node->arity;
    std::array<Edge, 4> c{};
    for (int i = 0; i < arity; ++i) {
      c[i] = attach_edges(a.node->child[i], b);
    }
    r = make_node(a.node->var, arity, c);
    cache_.emplace(key, r);
  }
  return {r.node, snap(a.w * r.w)};
}

Edge Manager::shift_edge(Edge e, std::uint32_t delta) {
  if (e.node == nullptr || delta == 0) return e;
  CacheKey key{Op::shift, e.node, nullptr, 0, 0, 0, 0, delta};
  Edge r;
  if (auto it = cache_.find(key); it != cache_.end()) {
    r = it->second;
  } else {
    const std::uint8_t arity = e.node->arity;
    std::array<Edge, 4> c{};
    for (int i = 0; i < arity; ++i) c[i] = shift_edge(e.node->child[i], delta);
    r = make_node(e.node->var + delta, arity, c);
    cache_.emplace(key, r);
  }
  return {r.node, snap(e.w * r.w)};
}

Edge Manager::insert_edge(Edge e, std::uint32_t pos, std::uint32_t levels) {
  if (e.w.exactly_zero()) return Edge::zero();
  if (e.node == nullptr) {
    // reached the amplitudes: the new identity level goes at the bottom
    assert(pos == levels);
    const Edge one = Edge::terminal({1.0, 0.0});
    const Edge id = make_node(pos, 4, {one, Edge::zero(), Edge::zero(), one});
    return {id.node, snap(e.w * id.w)};
  }
  if (e.node->var == pos) {
    const Edge sub = shift_edge({e.node, {1.0, 0.0}}, 1);
    const Edge r = make_node(pos, 4, {sub, Edge::zero(), Edge::zero(), sub});
    return {r.node, snap(e.w * r.w)};
  }
  assert(e.node->var < pos);
  CacheKey key{Op::insert, e.node, nullptr, 0, 0, 0, 0, pos};
  Edge r;
  if (auto it = cache_.find(key); it != cache_.end()) {
    r = it->second;
  } else {
    std::array<Edge, 4> c{};
    for (int i = 0; i < e.node->arity; ++i) {
      c[i] = insert_edge(e.node->child[i], pos, levels);
    }
    r = make_node(e.node->var, e.node->arity, c);
    cache_.emplace(key, r);
  }
  return {r.node, snap(e.w * r.w)};
}

Edge Manager::adjoint_edge(Edge e) {
  if (e.w.exactly_zero()) return Edge::zero();
  if (e.node == nullptr) return terminal_weight(conj(e.w));
  CacheKey key{Op::adjoint, e.node, nullptr, 0, 0, 0, 0, 0};
  Edge r;
  if (auto it = cache_.find(key); it != cache_.end()) {
    r = it->second;
  } else {
    std::array<Edge, 4> c{};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        c[2 * i + j] = adjoint_edge(e.node->child[2 * j + i]);
      }
    }
    r = make_node(e.node->var, 4, c);
    cache_.emplace(key, r);
  }
  return {r.node, snap(conj(e.w) * r.w)};
}

Edge Manager::import_edge(const Manager& src, Edge e) {
  if (e.w.exactly_zero()) return Edge::zero();
  if (e.node == nullptr) return terminal_weight(e.w);
  CacheKey key{Op::import, e.node, nullptr, 0, 0, 0, 0, 0};
  Edge r;
  if (auto it = cache_.find(key); it != cache_.end()) {
    r = it->second;
  } else {
    std::array<Edge, 4> c{};
    for (int i = 0; i < e.node->arity; ++i) {
      c[i] = import_edge(src, e.node->child[i]);
    }
    r = make_node(e.node->var, e.node->arity, c);
    cache_.emplace(key, r);
  }
  return {r.node, snap(e.w * r.w)};
}

Edge Manager::identity_chain(std::uint32_t from, std::uint32_t to) {
  Edge e = Edge::terminal({1.0, 0.0});
  for (std::uint32_t v = to; v > from; --v) {
    e = make_node(v - 1, 4, {e, Edge::zero(), Edge::zero(), e});
  }
  return e;
}

Edge Manager::build_vector(std::span<const std::complex<double>> v,
                           std::uint32_t var, std::size_t row0,
                           std::size_t size) {
  if (size == 1) return terminal_weight(Complex::from_std(v[row0]));
  const std::size_t half = size / 2;
  std::array<Edge, 4> c{};
  c[0] = build_vector(v, var + 1, row0, half);
  c[1] = build_vector(v, var + 1, row0 + half, half);
  return make_node(var, 2, c);
}

Edge Manager::build_matrix(std::span<const std::complex<double>> m,
                           std::uint32_t var, std::size_t full,
                           std::size_t row0, std::size_t col0,
                           std::size_t size) {
  if (size == 1) {
    return terminal_weight(Complex::from_std(m[row0 * full + col0]));
  }
  const std::size_t half = size / 2;
  std::array<Edge, 4> c{};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t col = 0; col < 2; ++col) {
      c[2 * r + col] = build_matrix(m, var + 1, full, row0 + r * half,
                                    col0 + col * half, half);
    }
  }
  return make_node(var, 4, c);
}

double Manager::max_abs_edge(
    Edge e, std::unordered_map<const Node*, double>& memo) const {
  if (e.w.exactly_zero()) return 0.0;
  const double w = dd::abs(e.w);
  if (e.node == nullptr) return w;
  if (auto it = memo.find(e.node); it != memo.end()) return w * it->second;
  double m = 0.0;
  for (int i = 0; i < e.node->arity; ++i) {
    m = std::max(m, max_abs_edge(e.node->child[i], memo));
  }
  memo.emplace(e.node, m);
  return w * m;
}

void Manager::fill_dense(Edge e, std::size_t full, std::size_t row,
                         std::size_t col, Complex acc,
                         std::vector<std::complex<double>>& out,
                         bool matrix) const {
  if (e.w.exactly_zero()) return;
  acc = acc * e.w;
  if (e.node == nullptr) {
    out[matrix ? row * full + col : row] = acc.to_std();
    return;
  }
  const std::size_t stride = full >> (e.node->var + 1);
  if (e.node->arity == 2) {
    fill_dense(e.node->child[0], full, row, col, acc, out, matrix);
    fill_dense(e.node->child[1], full, row + stride, col, acc, out, matrix);
  } else {
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        fill_dense(e.node->child[2 * r + c], full, row + r * stride,
                   col + c * stride, acc, out, matrix);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Public surface

namespace {

std::uint32_t levels_for_size(std::size_t size, std::size_t radix,
                              const char* what) {
  std::uint32_t k = 0;
  std::size_t expect = 1;
  while (expect < size) {
    expect *= radix;
    ++k;
  }
  if (expect != size || size == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": entry count is not a power of the radix");
  }
  return k;
}

}  // namespace

Diagram Manager::make_vector(std::span<const std::complex<double>> entries) {
  maybe_collect();
  const std::uint32_t k = levels_for_size(entries.size(), 2, "make_vector");
  for (const auto& c : entries) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("make_vector: non-finite entry");
    }
  }
  return rooted(build_vector(entries, 0, 0, entries.size()), k, false);
}

Diagram Manager::make_matrix(std::span<const std::complex<double>> entries) {
  maybe_collect();
  const std::uint32_t k = levels_for_size(entries.size(), 4, "make_matrix");
  for (const auto& c : entries) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("make_matrix: non-finite entry");
    }
  }
  const std::size_t dim = std::size_t{1} << k;
  return rooted(build_matrix(entries, 0, dim, 0, 0, dim), k, true);
}

Diagram Manager::identity(std::uint32_t levels) {
  maybe_collect();
  return rooted(identity_chain(0, levels), levels, true);
}

Diagram Manager::zero_matrix(std::uint32_t levels) {
  return rooted(Edge::zero(), levels, true);
}

Diagram Manager::zero_vector(std::uint32_t levels) {
  return rooted(Edge::zero(), levels, false);
}

Diagram Manager::embed_one_qubit(const Mat2& mat, std::uint32_t level,
                                 std::uint32_t width) {
  if (level >= width) {
    throw std::invalid_argument("embed_one_qubit: level out of range");
  }
  maybe_collect();
  const Edge below = identity_chain(level + 1, width);
  std::array<Edge, 4> c{};
  for (int i = 0; i < 4; ++i) {
    c[i] = {below.node, Complex::from_std(mat[i]) * below.w};
  }
  Edge e = make_node(level, 4, c);
  for (std::uint32_t v = level; v > 0; --v) {
    e = make_node(v - 1, 4, {e, Edge::zero(), Edge::zero(), e});
  }
  return rooted(e, width, true);
}

Diagram Manager::embed_two_qubit(const Mat4& mat, std::uint32_t la,
                                 std::uint32_t lb, std::uint32_t width) {
  if (!(la < lb) || lb >= width) {
    throw std::invalid_argument("embed_two_qubit: bad levels");
  }
  maybe_collect();
  const Edge below = identity_chain(lb + 1, width);
  std::array<Edge, 4> top{};
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      std::array<Edge, 4> inner{};
      for (int b = 0; b < 2; ++b) {
        for (int d = 0; d < 2; ++d) {
          const auto entry = mat[(2 * a + b) * 4 + (2 * c + d)];
          inner[2 * b + d] = {below.node, Complex::from_std(entry) * below.w};
        }
      }
      Edge m = make_node(lb, 4, inner);
      for (std::uint32_t v = lb; v > la + 1; --v) {
        m = make_node(v - 1, 4, {m, Edge::zero(), Edge::zero(), m});
      }
      top[2 * a + c] = m;
    }
  }
  Edge e = make_node(la, 4, top);
  for (std::uint32_t v = la; v > 0; --v) {
    e = make_node(v - 1, 4, {e, Edge::zero(), Edge::zero(), e});
  }
  return rooted(e, width, true);
}

Diagram Manager::insert_identity_level(const Diagram& a, std::uint32_t pos) {
  if (a.manager() != this) {
    throw std::invalid_argument("insert_identity_level: foreign diagram");
  }
  if (!a.is_matrix()) {
    throw std::invalid_argument("insert_identity_level: matrix required");
  }
  if (pos > a.levels()) {
    throw std::invalid_argument("insert_identity_level: position out of range");
  }
  maybe_collect();
  if (a.is_zero()) return rooted(Edge::zero(), a.levels() + 1, true);
  return rooted(insert_edge(a.edge(), pos, a.levels()), a.levels() + 1, true);
}

Diagram Manager::import(const Diagram& other) {
  if (other.manager() == this) return other;
  maybe_collect();
  Edge e = other.is_zero()
               ? Edge::zero()
               : import_edge(*other.manager(), other.edge());
  return rooted(e, other.levels(), other.is_matrix());
}

namespace {

void require_same_shape(const Diagram& a, const Diagram& b, const char* op) {
  if (a.levels() != b.levels() || a.is_matrix() != b.is_matrix()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
  }
}

}  // namespace

Diagram Manager::add(const Diagram& a, const Diagram& b) {
  if (a.manager() != this || b.manager() != this) {
    throw std::invalid_argument("add: foreign diagram");
  }
  require_same_shape(a, b, "add");
  maybe_collect();
  return rooted(add_edges(a.edge(), b.edge()), a.levels(), a.is_matrix());
}

Diagram Manager::mul(const Diagram& a, const Diagram& b) {
  if (a.manager() != this || b.manager() != this) {
    throw std::invalid_argument("mul: foreign diagram");
  }
  if (!a.is_matrix() || a.levels() != b.levels()) {
    throw std::invalid_argument("mul: shape mismatch");
  }
  maybe_collect();
  return rooted(mul_edges(a.edge(), b.edge()), a.levels(), b.is_matrix());
}

Diagram Manager::kron(const Diagram& a, const Diagram& b) {
  if (a.manager() != this || b.manager() != this) {
    throw std::invalid_argument("kron: foreign diagram");
  }
  if (a.is_matrix() != b.is_matrix()) {
    throw std::invalid_argument("kron: shape mismatch");
  }
  maybe_collect();
  const std::uint32_t levels = a.levels() + b.levels();
  if (a.is_zero() || b.is_zero()) {
    return rooted(Edge::zero(), levels, a.is_matrix());
  }
  const Edge bs = shift_edge(b.edge(), a.levels());
  Edge r = attach_edges({a.edge().node, {1.0, 0.0}}, {bs.node, {1.0, 0.0}});
  r.w = snap(a.edge().w * bs.w * r.w);
  if (r.w.exactly_zero()) r = Edge::zero();
  return rooted(r, levels, a.is_matrix());
}

Diagram Manager::adjoint(const Diagram& a) {
  if (a.manager() != this) throw std::invalid_argument("adjoint: foreign diagram");
  if (!a.is_matrix()) {
    throw std::invalid_argument("adjoint: matrix required");
  }
  maybe_collect();
  return rooted(adjoint_edge(a.edge()), a.levels(), true);
}

Diagram Manager::scalar_mul(const std::complex<double>& s, const Diagram& a) {
  if (a.manager() != this) {
    throw std::invalid_argument("scalar_mul: foreign diagram");
  }
  maybe_collect();
  const Complex w = snap(Complex::from_std(s) * a.edge().w);
  Edge e = w.exactly_zero() ? Edge::zero() : Edge{a.edge().node, w};
  return rooted(e, a.levels(), a.is_matrix());
}

double Manager::max_abs_diff(const Diagram& a, const Diagram& b) {
  if (a.manager() != this || b.manager() != this) {
    throw std::invalid_argument("max_abs_diff: foreign diagram");
  }
  require_same_shape(a, b, "max_abs_diff");
  if (a.edge() == b.edge()) return 0.0;
  maybe_collect();
  Edge nb = b.edge();
  nb.w = {-nb.w.re, -nb.w.im};
  const Edge diff = add_edges(a.edge(), nb);
  std::unordered_map<const Node*, double> memo;
  return max_abs_edge(diff, memo);
}

std::vector<std::complex<double>> Manager::to_dense(const Diagram& a) {
  if (a.manager() != this) throw std::invalid_argument("to_dense: foreign diagram");
  if (a.levels() > cfg_.dense_cap_levels) {
    throw std::invalid_argument("to_dense: level count exceeds configured cap");
  }
  const std::size_t dim = std::size_t{1} << a.levels();
  std::vector<std::complex<double>> out(a.is_matrix() ? dim * dim : dim,
                                        {0.0, 0.0});
  fill_dense(a.edge(), dim, 0, 0, {1.0, 0.0}, out, a.is_matrix());
  return out;
}

std::string Manager::dump(const Diagram& a) {
  std::string out;
  std::unordered_map<const Node*, int> ids;
  int next_id = 0;

  auto child_ref = [&](const Edge& e) {
    std::string s;
    if (e.is_zero()) return std::string("0");
    if (e.node == nullptr) {
      s = "T(";
    } else {
      s = "n" + std::to_string(ids.at(e.node)) + "(";
    }
    format_complex(s, e.w);
    s += ")";
    return s;
  };

  auto visit = [&](auto&& self, const Edge& e) -> void {
    if (e.node == nullptr || ids.contains(e.node)) return;
    for (int i = 0; i < e.node->arity; ++i) self(self, e.node->child[i]);
    ids.emplace(e.node, next_id++);
    out += "n" + std::to_string(ids.at(e.node)) +
           " var=" + std::to_string(e.node->var) + " [";
    for (int i = 0; i < e.node->arity; ++i) {
      if (i > 0) out += " ";
      out += child_ref(e.node->child[i]);
    }
    out += "]\n";
  };
  visit(visit, a.edge());
  out += std::string(a.is_matrix() ? "matrix" : "vector") +
         " levels=" + std::to_string(a.levels()) + " root=" +
         child_ref(a.edge()) + "\n";
  return out;
}

}  // namespace qeq::dd
