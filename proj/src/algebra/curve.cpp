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

#include "zkc/algebra/curve.hpp"

#include <stdexcept>

namespace zkc::algebra {

namespace {

Fq fq_hex(std::string_view hex) { return *Fq::from_canonical(U256::from_hex(hex)); }

// Shared-doubling (Straus) multi-exponentiation over the scalar bits.
template <typename Point>
Point multi_exp_impl(std::span<const Point> bases, std::span<const Scalar> scalars) {
  if (bases.size() != scalars.size()) throw std::invalid_argument("multi_exp: size mismatch");
  std::vector<U256> ks;
  ks.reserve(scalars.size());
  std::size_t bits = 0;
  for (const auto& s : scalars) {
    ks.push_back(s.to_canonical());
    bits = std::max(bits, ks.back().bit_length());
  }
  Point acc;
  for (std::size_t i = bits; i-- > 0;) {
    acc = acc.dbl();
    for (std::size_t j = 0; j < ks.size(); ++j) {
      if (ks[j].bit(i)) acc += bases[j];
    }
  }
  return acc;
}

}  // namespace

const Fq& G1Curve::b() {
  static const Fq b = Fq::from_u64(3);
  return b;
}

const G1Point& G1Curve::generator() {
  static const G1Point g = G1Point::from_affine(Fq::from_u64(1), Fq::from_u64(2));
  return g;
}

const G2Point& G2Curve::generator() {
  static const G2Point g = G2Point::from_affine(
      Fq2{fq_hex("1800deef121f1e76426a00665e5c4479674322d4f75edadd46debd5cd992f6ed"),
          fq_hex("198e9393920d483a7260bfb731fb5d25f1aa493335a9e71297e485b7aef312c2")},
      Fq2{fq_hex("12c85ea5db8c6deb4aab71808dcb408fe3d1e7690c43d37b4ce6cc0166fa7daa"),
          fq_hex("090689d0585ff075ec9e99ad690c3395bc4b313370b38ef355acdadcd122975b")});
  return g;
}

bool G2Curve::in_subgroup(const G2Point& p) { return p.mul(FrParams::kModulus).is_infinity(); }

U256 g2_cofactor() {
  U256 two_p;
  add_with_carry(two_p, FqParams::kModulus, FqParams::kModulus);
  U256 h;
  sub_with_borrow(h, two_p, FrParams::kModulus);
  return h;
}

G1Point multi_exp(std::span<const G1Point> bases, std::span<const Scalar> scalars) {
  return multi_exp_impl(bases, scalars);
}

G2Point multi_exp(std::span<const G2Point> bases, std::span<const Scalar> scalars) {
  return multi_exp_impl(bases, scalars);
}

}  // namespace zkc::algebra
