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

#include "zkc/algebra/uint256.hpp"

#include <algorithm>

namespace zkc::algebra {

std::optional<U256> U256::from_decimal(std::string_view dec) {
  if (dec.empty()) return std::nullopt;
  U256 acc;
  for (const char c : dec) {
    if (c < '0' || c > '9') return std::nullopt;
    // acc = acc * 10 + digit, detecting overflow.
    u128 carry = static_cast<u128>(c - '0');
    for (auto& l : acc.limb) {
      const u128 cur = static_cast<u128>(l) * 10 + carry;
      l = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
    }
    if (carry != 0) return std::nullopt;
  }
  return acc;
}

std::string U256::to_decimal() const {
  if (is_zero()) return "0";
  std::string out;
  U256 v = *this;
  while (!v.is_zero()) out.push_back(static_cast<char>('0' + div_small(v, 10)));
  std::reverse(out.begin(), out.end());
  return out;
}

std::string U256::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(64, '0');
  for (std::size_t i = 0; i < 64; ++i) {
    const std::size_t bitpos = (63 - i) * 4;
    out[i] = kDigits[(limb[bitpos / 64] >> (bitpos % 64)) & 0xF];
  }
  return out;
}

U256 U256::from_be_bytes(std::span<const std::uint8_t, 32> bytes) {
  U256 out;
  for (std::size_t i = 0; i < 32; ++i) {
    const std::size_t pos = 31 - i;
    out.limb[pos / 8] |= static_cast<std::uint64_t>(bytes[i]) << ((pos % 8) * 8);
  }
  return out;
}

void U256::to_be_bytes(std::span<std::uint8_t, 32> out) const {
  for (std::size_t i = 0; i < 32; ++i) {
    const std::size_t pos = 31 - i;
    out[i] = static_cast<std::uint8_t>(limb[pos / 8] >> ((pos % 8) * 8));
  }
}

}  // namespace zkc::algebra
