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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>

namespace zkc::algebra {

using u128 = unsigned __int128;

/// Fixed-width 256-bit unsigned integer, four little-endian 64-bit limbs.
struct U256 {
  std::array<std::uint64_t, 4> limb{};

  constexpr U256() = default;
  constexpr explicit U256(std::uint64_t v) : limb{v, 0, 0, 0} {}
  constexpr U256(std::uint64_t l0, std::uint64_t l1, std::uint64_t l2, std::uint64_t l3)
      : limb{l0, l1, l2, l3} {}

  /// Parses a big-endian hex literal (optional 0x prefix, at most 64 digits).
  static constexpr U256 from_hex(std::string_view hex) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
    U256 out;
    std::size_t bit = 0;
    for (std::size_t i = hex.size(); i-- > 0;) {
      const char c = hex[i];
      std::uint64_t nibble = 0;
      if (c >= '0' && c <= '9') {
        nibble = static_cast<std::uint64_t>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        nibble = static_cast<std::uint64_t>(c - 'a' + 10);
      } else if (c >= 'A' && c <= 'F') {
        nibble = static_cast<std::uint64_t>(c - 'A' + 10);
      } else {
        throw std::invalid_argument("invalid hex digit");
      }
      if (bit >= 256) throw std::invalid_argument("hex literal too long");
      out.limb[bit / 64] |= nibble << (bit % 64);
      bit += 4;
    }
    return out;
  }

  /// Parses a decimal string; nullopt on bad digits or overflow.
  static std::optional<U256> from_decimal(std::string_view dec);
  std::string to_decimal() const;
  std::string to_hex() const;  // 64 lowercase digits, no prefix

  static U256 from_be_bytes(std::span<const std::uint8_t, 32> bytes);
  void to_be_bytes(std::span<std::uint8_t, 32> out) const;

  constexpr bool is_zero() const { return (limb[0] | limb[1] | limb[2] | limb[3]) == 0; }
  constexpr bool bit(std::size_t i) const { return (limb[i / 64] >> (i % 64)) & 1U; }
  constexpr std::size_t bit_length() const {
    for (std::size_t i = 4; i-- > 0;) {
      if (limb[i] != 0) return i * 64 + 64 - static_cast<std::size_t>(__builtin_clzll(limb[i]));
    }
    return 0;
  }

  friend constexpr bool operator==(const U256&, const U256&) = default;
  friend constexpr auto operator<=>(const U256& a, const U256& b) {
    for (std::size_t i = 4; i-- > 0;) {
      if (a.limb[i] != b.limb[i]) return a.limb[i] <=> b.limb[i];
    }
    return std::strong_ordering::equal;
  }
};

/// a + b, returning the carry out.
constexpr std::uint64_t add_with_carry(U256& out, const U256& a, const U256& b) {
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const u128 s = static_cast<u128>(a.limb[i]) + b.limb[i] + carry;
    out.limb[i] = static_cast<std::uint64_t>(s);
    carry = static_cast<std::uint64_t>(s >> 64);
  }
  return carry;
}

/// a - b, returning the borrow out.
constexpr std::uint64_t sub_with_borrow(U256& out, const U256& a, const U256& b) {
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const u128 d = static_cast<u128>(a.limb[i]) - b.limb[i] - borrow;
    out.limb[i] = static_cast<std::uint64_t>(d);
    borrow = static_cast<std::uint64_t>(d >> 64) & 1U;
  }
  return borrow;
}

/// (a + b) mod m for a, b < m.
constexpr U256 add_mod(const U256& a, const U256& b, const U256& m) {
  U256 s;
  const std::uint64_t carry = add_with_carry(s, a, b);
  if (carry != 0 || s >= m) sub_with_borrow(s, s, m);
  return s;
}

/// Divides by a small divisor in place, returning the remainder.
constexpr std::uint64_t div_small(U256& a, std::uint64_t divisor) {
  u128 rem = 0;
  for (std::size_t i = 4; i-- > 0;) {
    const u128 cur = (rem << 64) | a.limb[i];
    a.limb[i] = static_cast<std::uint64_t>(cur / divisor);
    rem = cur % divisor;
  }
  return static_cast<std::uint64_t>(rem);
}

}  // namespace zkc::algebra
