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

#include "zkc/algebra/encoding.hpp"

#include <algorithm>
#include <string>

namespace zkc::algebra {

namespace {

void put_fq(const Fq& v, std::uint8_t* out) { v.to_be_bytes(std::span<std::uint8_t, 32>(out, 32)); }

Fq get_fq(std::span<const std::uint8_t> bytes, std::size_t offset) {
  const auto raw = U256::from_be_bytes(std::span<const std::uint8_t, 32>(bytes.data() + offset, 32));
  auto v = Fq::from_canonical(raw);
  if (!v) throw Error(Errc::MalformedEncoding, "coordinate not below field modulus");
  return *v;
}

bool all_zero(std::span<const std::uint8_t> bytes) {
  return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
}

void check_length(std::span<const std::uint8_t> bytes, std::size_t expected) {
  if (bytes.size() != expected) {
    throw Error(Errc::MalformedEncoding,
                "expected " + std::to_string(expected) + " bytes, got " + std::to_string(bytes.size()));
  }
}

}  // namespace

G1Bytes encode_point(const G1Point& p) {
  G1Bytes out{};
  const auto a = p.to_affine();
  if (a.infinity) return out;
  put_fq(a.x, out.data());
  put_fq(a.y, out.data() + 32);
  return out;
}

G2Bytes encode_point(const G2Point& p) {
  G2Bytes out{};
  const auto a = p.to_affine();
  if (a.infinity) return out;
  put_fq(a.x.c1, out.data());
  put_fq(a.x.c0, out.data() + 32);
  put_fq(a.y.c1, out.data() + 64);
  put_fq(a.y.c0, out.data() + 96);
  return out;
}

G1Point decode_g1(std::span<const std::uint8_t> bytes) {
  check_length(bytes, kG1EncodedSize);
  if (all_zero(bytes)) return G1Point::infinity();
  const auto p = G1Point::from_affine(get_fq(bytes, 0), get_fq(bytes, 32));
  if (!p.is_on_curve()) throw Error(Errc::MalformedEncoding, "G1 point not on curve");
  return p;
}

G2Point decode_g2(std::span<const std::uint8_t> bytes) {
  check_length(bytes, kG2EncodedSize);
  if (all_zero(bytes)) return G2Point::infinity();
  const Fq2 x{get_fq(bytes, 32), get_fq(bytes, 0)};
  const Fq2 y{get_fq(bytes, 96), get_fq(bytes, 64)};
  const auto p = G2Point::from_affine(x, y);
  if (!p.is_on_curve()) throw Error(Errc::MalformedEncoding, "G2 point not on curve");
  if (!p.in_subgroup()) throw Error(Errc::MalformedEncoding, "G2 point outside order-r subgroup");
  return p;
}

std::array<std::uint8_t, 32> encode_scalar(const Scalar& s) {
  std::array<std::uint8_t, 32> out{};
  s.to_be_bytes(out);
  return out;
}

}  // namespace zkc::algebra
