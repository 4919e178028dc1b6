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

#include <cmath>
#include <complex>
#include <cstdint>

namespace qeq::dd {

/// Complex edge weight. Two weights are kernel-equal when both components
/// agree within the manager's tolerance; diagrams never store non-finite
/// values.
struct Complex {
  double re = 0.0;
  double im = 0.0;

  friend constexpr bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }

  [[nodiscard]] constexpr bool exactly_zero() const {
    return re == 0.0 && im == 0.0;
  }
  [[nodiscard]] constexpr bool exactly_one() const {
    return re == 1.0 && im == 0.0;
  }
  [[nodiscard]] bool finite() const {
    return std::isfinite(re) && std::isfinite(im);
  }

  [[nodiscard]] std::complex<double> to_std() const { return {re, im}; }
  static Complex from_std(const std::complex<double>& c) {
    return {c.real(), c.imag()};
  }
};

constexpr Complex operator+(const Complex& a, const Complex& b) {
  return {a.re + b.re, a.im + b.im};
}
constexpr Complex operator-(const Complex& a, const Complex& b) {
  return {a.re - b.re, a.im - b.im};
}
constexpr Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
constexpr Complex conj(const Complex& a) { return {a.re, -a.im}; }

/// Squared modulus; cheap and monotone in the modulus, used for pivot
/// selection during normalization.
constexpr double abs2(const Complex& a) { return a.re * a.re + a.im * a.im; }

inline double abs(const Complex& a) { return std::hypot(a.re, a.im); }

inline Complex operator/(const Complex& a, const Complex& b) {
  const double d = abs2(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

/// Componentwise closeness test at tolerance eps (the kernel-equality
/// relation on weights).
inline bool approx_equal(const Complex& a, const Complex& b, double eps) {
  return std::fabs(a.re - b.re) <= eps && std::fabs(a.im - b.im) <= eps;
}

inline bool approx_zero(const Complex& a, double eps) {
  return std::fabs(a.re) <= eps && std::fabs(a.im) <= eps;
}

}  // namespace qeq::dd
