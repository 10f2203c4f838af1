// Copyright 2026 The zk-compliance Authors.
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

// BN254 (alt_bn128) base and scalar fields and the extension tower used by
// the pairing:
//
//   Fq2  = Fq[i]  / (i^2 + 1)
//   Fq6  = Fq2[v] / (v^3 - xi),  xi = 9 + i
//   Fq12 = Fq6[w] / (w^2 - v)

#pragma once

#include <optional>

#include "zkc/algebra/prime_field.hpp"
#include "zkc/algebra/uint256.hpp"

namespace zkc::algebra {

struct FqParams {
  static constexpr U256 kModulus =
      U256::from_hex("30644e72e131a029b85045b68181585d97816a916871ca8d3c208c16d87cfd47");
};

struct FrParams {
  static constexpr U256 kModulus =
      U256::from_hex("30644e72e131a029b85045b68181585d2833e84879b9709143e1f593f0000001");
};

using Fq = PrimeField<FqParams>;
/// Scalar field of the curve groups; every circuit signal lives here.
using Fr = PrimeField<FrParams>;
using Scalar = Fr;

/// Curve parameter u; the ate loop runs over 6u + 2.
inline constexpr std::uint64_t kBnU = 0x44e992b44a6909f1ULL;

struct Fq2 {
  Fq c0, c1;

  static Fq2 zero() { return {}; }
  static Fq2 one() { return {Fq::one(), Fq::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  friend bool operator==(const Fq2&, const Fq2&) = default;

  Fq2 operator+(const Fq2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fq2 operator-(const Fq2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fq2 operator-() const { return {-c0, -c1}; }
  Fq2 operator*(const Fq2& o) const {
    const Fq aa = c0 * o.c0;
    const Fq bb = c1 * o.c1;
    return {aa - bb, (c0 + c1) * (o.c0 + o.c1) - aa - bb};
  }
  Fq2 operator*(const Fq& s) const { return {c0 * s, c1 * s}; }
  Fq2& operator+=(const Fq2& o) { return *this = *this + o; }
  Fq2& operator-=(const Fq2& o) { return *this = *this - o; }
  Fq2& operator*=(const Fq2& o) { return *this = *this * o; }

  Fq2 square() const {
    const Fq ab = c0 * c1;
    return {(c0 + c1) * (c0 - c1), ab.dbl()};
  }
  Fq2 dbl() const { return {c0.dbl(), c1.dbl()}; }
  Fq2 conjugate() const { return {c0, -c1}; }

  /// Multiplication by xi = 9 + i.
  Fq2 mul_by_xi() const {
    const Fq t0 = c0.dbl().dbl().dbl() + c0;  // 9 c0
    const Fq t1 = c1.dbl().dbl().dbl() + c1;  // 9 c1
    return {t0 - c1, t1 + c0};
  }

  Fq2 inverse() const;
  Fq2 pow(const U256& e) const;
  std::optional<Fq2> sqrt() const;
};

struct Fq6 {
  Fq2 c0, c1, c2;

  static Fq6 zero() { return {}; }
  static Fq6 one() { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  friend bool operator==(const Fq6&, const Fq6&) = default;

  Fq6 operator+(const Fq6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  Fq6 operator-(const Fq6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  Fq6 operator-() const { return {-c0, -c1, -c2}; }
  Fq6 operator*(const Fq6& o) const;
  Fq6& operator*=(const Fq6& o) { return *this = *this * o; }
  Fq6 square() const { return *this * *this; }

  /// Multiplication by v (shifts coefficients, wrapping through xi).
  Fq6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

  Fq6 inverse() const;
};

struct Fq12 {
  Fq6 c0, c1;

  static Fq12 zero() { return {}; }
  static Fq12 one() { return {Fq6::one(), Fq6::zero()}; }

  bool is_one() const { return *this == one(); }
  friend bool operator==(const Fq12&, const Fq12&) = default;

  Fq12 operator*(const Fq12& o) const {
    const Fq6 aa = c0 * o.c0;
    const Fq6 bb = c1 * o.c1;
    return {aa + bb.mul_by_v(), (c0 + c1) * (o.c0 + o.c1) - aa - bb};
  }
  Fq12& operator*=(const Fq12& o) { return *this = *this * o; }
  Fq12 square() const {
    const Fq6 ab = c0 * c1;
    const Fq6 t = (c0 + c1) * (c0 + c1.mul_by_v());
    return {t - ab - ab.mul_by_v(), ab + ab};
  }
  /// The p^6 Frobenius, which is also the inverse on the cyclotomic subgroup.
  Fq12 conjugate() const { return {c0, -c1}; }

  Fq12 inverse() const;
  Fq12 pow(const U256& e) const;
  Fq12 pow_u64(std::uint64_t e) const;
  /// x -> x^p.
  Fq12 frobenius() const;
};

/// Twist coefficient b' = 3 / xi of the G2 curve y^2 = x^3 + b'.
const Fq2& twist_b();

/// gamma[k] = xi^(k (p - 1) / 6) for k = 0..5.
const Fq2& frobenius_gamma(std::size_t k);

}  // namespace zkc::algebra
