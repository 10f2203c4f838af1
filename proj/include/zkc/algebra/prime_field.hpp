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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "zkc/algebra/uint256.hpp"
#include "zkc/error.hpp"

namespace zkc::algebra {

namespace detail {

// 2^k mod m by repeated doubling; only used at compile time.
constexpr U256 pow2_mod(std::size_t k, const U256& m) {
  U256 x(1);
  for (std::size_t i = 0; i < k; ++i) x = add_mod(x, x, m);
  return x;
}

// -m^{-1} mod 2^64 via Newton iteration.
constexpr std::uint64_t neg_inv64(std::uint64_t m0) {
  std::uint64_t x = 1;
  for (int i = 0; i < 7; ++i) x *= 2 - m0 * x;
  return ~x + 1;
}

}  // namespace detail

/// Prime field GF(m) for a 254-bit odd modulus, values kept in Montgomery form.
///
/// `Params` supplies `static constexpr U256 kModulus`. All Montgomery
/// constants are derived from it at compile time.
template <typename Params>
class PrimeField {
 public:
  static constexpr U256 kModulus = Params::kModulus;
  static constexpr U256 kR = detail::pow2_mod(256, kModulus);
  static constexpr U256 kR2 = detail::pow2_mod(512, kModulus);
  static constexpr U256 kR3 = detail::pow2_mod(768, kModulus);
  static constexpr std::uint64_t kInv = detail::neg_inv64(kModulus.limb[0]);

  constexpr PrimeField() = default;

  static constexpr PrimeField zero() { return PrimeField(); }
  static constexpr PrimeField one() { return from_mont(kR); }

  static PrimeField from_u64(std::uint64_t v) { return from_canonical_unchecked(U256(v)); }

  /// Canonical residue `v`; nullopt if v >= modulus.
  static std::optional<PrimeField> from_canonical(const U256& v) {
    if (v >= kModulus) return std::nullopt;
    return from_canonical_unchecked(v);
  }

  /// Any 256-bit integer, reduced modulo the field.
  static PrimeField from_u256_reduced(U256 v) {
    while (v >= kModulus) sub_with_borrow(v, v, kModulus);
    return from_canonical_unchecked(v);
  }

  static std::optional<PrimeField> from_decimal(std::string_view dec) {
    auto v = U256::from_decimal(dec);
    if (!v) return std::nullopt;
    return from_canonical(*v);
  }

  static constexpr PrimeField from_mont(const U256& m) {
    PrimeField f;
    f.mont_ = m;
    return f;
  }

  U256 to_canonical() const { return mont_mul(mont_, U256(1)); }
  const U256& mont() const { return mont_; }
  std::string to_decimal() const { return to_canonical().to_decimal(); }

  constexpr bool is_zero() const { return mont_.is_zero(); }
  bool is_one() const { return mont_ == kR; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  PrimeField operator+(const PrimeField& o) const { return from_mont(add_mod(mont_, o.mont_, kModulus)); }
  PrimeField operator-(const PrimeField& o) const {
    U256 d;
    if (sub_with_borrow(d, mont_, o.mont_) != 0) add_with_carry(d, d, kModulus);
    return from_mont(d);
  }
  PrimeField operator-() const { return zero() - *this; }
  PrimeField operator*(const PrimeField& o) const { return from_mont(mont_mul(mont_, o.mont_)); }
  PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
  PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
  PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

  PrimeField square() const { return *this * *this; }
  PrimeField dbl() const { return *this + *this; }

  PrimeField pow(const U256& e) const {
    PrimeField acc = one();
    for (std::size_t i = e.bit_length(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }

  /// Multiplicative inverse by the binary extended Euclidean algorithm.
  PrimeField inverse() const {
    if (is_zero()) throw Error(Errc::InversionOfZero);
    // Invert the Montgomery representative aR, then mont_mul by R^3 to get a^-1 R.
    U256 u = mont_, v = kModulus, x1(1), x2;
    const U256 one(1);
    while (u != one && v != one) {
      while (!u.bit(0)) {
        shr1(u);
        halve_mod(x1);
      }
      while (!v.bit(0)) {
        shr1(v);
        halve_mod(x2);
      }
      if (u >= v) {
        sub_with_borrow(u, u, v);
        x1 = sub_mod(x1, x2);
      } else {
        sub_with_borrow(v, v, u);
        x2 = sub_mod(x2, x1);
      }
    }
    return from_mont(mont_mul(u == one ? x1 : x2, kR3));
  }

  /// a^(m-2); kept as a cross-check for inverse().
  PrimeField fermat_inverse() const {
    if (is_zero()) throw Error(Errc::InversionOfZero);
    U256 e;
    sub_with_borrow(e, kModulus, U256(2));
    return pow(e);
  }

  /// Euler criterion; zero counts as a square.
  bool is_square() const {
    if (is_zero()) return true;
    U256 e;
    sub_with_borrow(e, kModulus, U256(1));
    div_small(e, 2);
    return pow(e).is_one();
  }

  /// Square root for moduli congruent to 3 mod 4; nullopt for non-residues.
  std::optional<PrimeField> sqrt() const
    requires(Params::kModulus.limb[0] % 4 == 3)
  {
    U256 e;
    add_with_carry(e, kModulus, U256(1));
    div_small(e, 4);
    const PrimeField root = pow(e);
    if (root.square() != *this) return std::nullopt;
    return root;
  }

  void to_be_bytes(std::span<std::uint8_t, 32> out) const { to_canonical().to_be_bytes(out); }

 private:
  static void shr1(U256& a) {
    for (std::size_t i = 0; i < 3; ++i) a.limb[i] = (a.limb[i] >> 1) | (a.limb[i + 1] << 63);
    a.limb[3] >>= 1;
  }
  // x / 2 mod m for x < m; m < 2^255 so x + m cannot overflow.
  static void halve_mod(U256& x) {
    if (x.bit(0)) add_with_carry(x, x, kModulus);
    shr1(x);
  }
  static U256 sub_mod(const U256& a, const U256& b) {
    U256 d;
    if (sub_with_borrow(d, a, b) != 0) add_with_carry(d, d, kModulus);
    return d;
  }

  static PrimeField from_canonical_unchecked(const U256& v) { return from_mont(mont_mul(v, kR2)); }

  // CIOS Montgomery multiplication: a * b * 2^-256 mod m.
  static U256 mont_mul(const U256& a, const U256& b) {
    std::uint64_t t[6] = {0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < 4; ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < 4; ++j) {
        const u128 cur = static_cast<u128>(a.limb[j]) * b.limb[i] + t[j] + carry;
        t[j] = static_cast<std::uint64_t>(cur);
        carry = static_cast<std::uint64_t>(cur >> 64);
      }
      u128 cur = static_cast<u128>(t[4]) + carry;
      t[4] = static_cast<std::uint64_t>(cur);
      t[5] = static_cast<std::uint64_t>(cur >> 64);

      const std::uint64_t m = t[0] * kInv;
      cur = static_cast<u128>(m) * kModulus.limb[0] + t[0];
      carry = static_cast<std::uint64_t>(cur >> 64);
      for (std::size_t j = 1; j < 4; ++j) {
        cur = static_cast<u128>(m) * kModulus.limb[j] + t[j] + carry;
        t[j - 1] = static_cast<std::uint64_t>(cur);
        carry = static_cast<std::uint64_t>(cur >> 64);
      }
      cur = static_cast<u128>(t[4]) + carry;
      t[3] = static_cast<std::uint64_t>(cur);
      t[4] = t[5] + static_cast<std::uint64_t>(cur >> 64);
    }
    U256 r(t[0], t[1], t[2], t[3]);
    if (t[4] != 0 || r >= kModulus) sub_with_borrow(r, r, kModulus);
    return r;
  }

  U256 mont_;
};

}  // namespace zkc::algebra
