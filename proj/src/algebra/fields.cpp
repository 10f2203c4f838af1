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

#include "zkc/algebra/fields.hpp"

#include <array>

namespace zkc::algebra {

Fq2 Fq2::inverse() const {
  const Fq norm = c0.square() + c1.square();
  const Fq inv = norm.inverse();
  return {c0 * inv, -(c1 * inv)};
}

Fq2 Fq2::pow(const U256& e) const {
  Fq2 acc = one();
  for (std::size_t i = e.bit_length(); i-- > 0;) {
    acc = acc.square();
    if (e.bit(i)) acc *= *this;
  }
  return acc;
}

// Complex-method square root: reduce to square roots in Fq via the norm.
std::optional<Fq2> Fq2::sqrt() const {
  if (c1.is_zero()) {
    if (auto r = c0.sqrt()) return Fq2{*r, Fq::zero()};
    // -1 is a non-residue in Fq, so -c0 is a square.
    if (auto r = (-c0).sqrt()) return Fq2{Fq::zero(), *r};
    return std::nullopt;
  }
  const auto norm_root = (c0.square() + c1.square()).sqrt();
  if (!norm_root) return std::nullopt;
  const Fq half = Fq::from_u64(2).inverse();
  auto x0 = ((c0 + *norm_root) * half).sqrt();
  if (!x0) x0 = ((c0 - *norm_root) * half).sqrt();
  if (!x0 || x0->is_zero()) return std::nullopt;
  const Fq2 root{*x0, c1 * (x0->dbl()).inverse()};
  if (root.square() != *this) return std::nullopt;
  return root;
}

Fq6 Fq6::operator*(const Fq6& o) const {
  const Fq2 v0 = c0 * o.c0;
  const Fq2 v1 = c1 * o.c1;
  const Fq2 v2 = c2 * o.c2;
  return {
      v0 + ((c1 + c2) * (o.c1 + o.c2) - v1 - v2).mul_by_xi(),
      (c0 + c1) * (o.c0 + o.c1) - v0 - v1 + v2.mul_by_xi(),
      (c0 + c2) * (o.c0 + o.c2) - v0 - v2 + v1,
  };
}

Fq6 Fq6::inverse() const {
  const Fq2 t0 = c0.square() - (c1 * c2).mul_by_xi();
  const Fq2 t1 = c2.square().mul_by_xi() - c0 * c1;
  const Fq2 t2 = c1.square() - c0 * c2;
  const Fq2 det = c0 * t0 + (c2 * t1 + c1 * t2).mul_by_xi();
  const Fq2 inv = det.inverse();
  return {t0 * inv, t1 * inv, t2 * inv};
}

Fq12 Fq12::inverse() const {
  const Fq6 det = c0.square() - c1.square().mul_by_v();
  const Fq6 inv = det.inverse();
  return {c0 * inv, -(c1 * inv)};
}

Fq12 Fq12::pow(const U256& e) const {
  Fq12 acc = one();
  for (std::size_t i = e.bit_length(); i-- > 0;) {
    acc = acc.square();
    if (e.bit(i)) acc *= *this;
  }
  return acc;
}

Fq12 Fq12::pow_u64(std::uint64_t e) const { return pow(U256(e)); }

// Coefficient of w^k: c0 holds w^0, w^2, w^4 and c1 holds w^1, w^3, w^5.
// (a w^k)^p = conj(a) w^k gamma[k].
Fq12 Fq12::frobenius() const {
  return {
      {c0.c0.conjugate(), c0.c1.conjugate() * frobenius_gamma(2),
       c0.c2.conjugate() * frobenius_gamma(4)},
      {c1.c0.conjugate() * frobenius_gamma(1), c1.c1.conjugate() * frobenius_gamma(3),
       c1.c2.conjugate() * frobenius_gamma(5)},
  };
}

const Fq2& twist_b() {
  static const Fq2 b = Fq2{Fq::from_u64(9), Fq::one()}.inverse() * Fq::from_u64(3);
  return b;
}

const Fq2& frobenius_gamma(std::size_t k) {
  static const std::array<Fq2, 6> gamma = [] {
    U256 e;
    sub_with_borrow(e, FqParams::kModulus, U256(1));
    div_small(e, 6);
    const Fq2 g1 = Fq2{Fq::from_u64(9), Fq::one()}.pow(e);
    std::array<Fq2, 6> out;
    out[0] = Fq2::one();
    for (std::size_t i = 1; i < 6; ++i) out[i] = out[i - 1] * g1;
    return out;
  }();
  return gamma[k];
}

}  // namespace zkc::algebra
