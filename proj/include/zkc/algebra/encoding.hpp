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
#include <cstdint>
#include <span>

#include "zkc/algebra/curve.hpp"

namespace zkc::algebra {

inline constexpr std::size_t kG1EncodedSize = 64;
inline constexpr std::size_t kG2EncodedSize = 128;

using G1Bytes = std::array<std::uint8_t, kG1EncodedSize>;
using G2Bytes = std::array<std::uint8_t, kG2EncodedSize>;

/// Uncompressed big-endian x || y. Infinity is all zeros.
G1Bytes encode_point(const G1Point& p);
/// x.c1 || x.c0 || y.c1 || y.c0 (imaginary part first, precompile order).
/// Infinity is all zeros.
G2Bytes encode_point(const G2Point& p);

/// Throws Error(MalformedEncoding) on wrong length, coordinates not below the
/// field modulus, points off the curve, or points outside the order-r group.
G1Point decode_g1(std::span<const std::uint8_t> bytes);
G2Point decode_g2(std::span<const std::uint8_t> bytes);

std::array<std::uint8_t, 32> encode_scalar(const Scalar& s);

}  // namespace zkc::algebra
