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

#include <cstddef>
#include <span>
#include <vector>

#include "zkc/algebra/fields.hpp"

namespace zkc::algebra {

/// Short-Weierstrass point y^2 = x^3 + b (a = 0) in Jacobian coordinates.
///
/// `Curve` supplies `Field`, `b()`, `generator()` and `in_subgroup(point)`.
/// Z = 0 encodes the point at infinity.
template <typename Curve>
class CurvePoint {
 public:
  using Field = typename Curve::Field;

  struct Affine {
    Field x{}, y{};
    bool infinity = true;
  };

  CurvePoint() : x_(Field::one()), y_(Field::one()), z_(Field::zero()) {}

  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint from_affine(const Field& x, const Field& y) { return CurvePoint(x, y, Field::one()); }
  static const CurvePoint& generator() { return Curve::generator(); }

  bool is_infinity() const { return z_.is_zero(); }

  Affine to_affine() const {
    if (is_infinity()) return {};
    const Field zinv = z_.inverse();
    const Field zinv2 = zinv.square();
    return {x_ * zinv2, y_ * zinv2 * zinv, false};
  }

  bool is_on_curve() const {
    if (is_infinity()) return true;
    // Y^2 = X^3 + b Z^6
    const Field z2 = z_.square();
    const Field z6 = z2.square() * z2;
    return y_.square() == x_.square() * x_ + Curve::b() * z6;
  }

  bool in_subgroup() const { return is_on_curve() && Curve::in_subgroup(*this); }

  CurvePoint operator-() const { return CurvePoint(x_, -y_, z_); }

  CurvePoint dbl() const {
    if (is_infinity()) return *this;
    const Field a = x_.square();
    const Field b = y_.square();
    const Field c = b.square();
    const Field d = ((x_ + b).square() - a - c).dbl();
    const Field e = a.dbl() + a;
    const Field f = e.square();
    const Field x3 = f - d.dbl();
    const Field c8 = c.dbl().dbl().dbl();
    const Field y3 = e * (d - x3) - c8;
    const Field z3 = (y_ * z_).dbl();
    return CurvePoint(x3, y3, z3);
  }

  CurvePoint operator+(const CurvePoint& o) const {
    if (is_infinity()) return o;
    if (o.is_infinity()) return *this;
    const Field z1z1 = z_.square();
    const Field z2z2 = o.z_.square();
    const Field u1 = x_ * z2z2;
    const Field u2 = o.x_ * z1z1;
    const Field s1 = y_ * o.z_ * z2z2;
    const Field s2 = o.y_ * z_ * z1z1;
    const Field h = u2 - u1;
    const Field r = (s2 - s1).dbl();
    if (h.is_zero()) {
      if (r.is_zero()) return dbl();
      return infinity();
    }
    const Field i = h.dbl().square();
    const Field j = h * i;
    const Field v = u1 * i;
    const Field x3 = r.square() - j - v.dbl();
    const Field y3 = r * (v - x3) - (s1 * j).dbl();
    const Field z3 = ((z_ + o.z_).square() - z1z1 - z2z2) * h;
    return CurvePoint(x3, y3, z3);
  }
  CurvePoint operator-(const CurvePoint& o) const { return *this + (-o); }
  CurvePoint& operator+=(const CurvePoint& o) { return *this = *this + o; }

  /// [k]P for an arbitrary 256-bit integer k (not reduced modulo r).
  CurvePoint mul(const U256& k) const {
    CurvePoint acc;
    for (std::size_t i = k.bit_length(); i-- > 0;) {
      acc = acc.dbl();
      if (k.bit(i)) acc += *this;
    }
    return acc;
  }
  CurvePoint operator*(const Scalar& k) const { return mul(k.to_canonical()); }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
    const Field z1z1 = a.z_.square();
    const Field z2z2 = b.z_.square();
    return a.x_ * z2z2 == b.x_ * z1z1 && a.y_ * z2z2 * b.z_ == b.y_ * z1z1 * a.z_;
  }

 private:
  CurvePoint(const Field& x, const Field& y, const Field& z) : x_(x), y_(y), z_(z) {}

  Field x_, y_, z_;
};

struct G1Curve {
  using Field = Fq;
  static const Fq& b();
  static const CurvePoint<G1Curve>& generator();
  // Cofactor one: every curve point is in the order-r group.
  static bool in_subgroup(const CurvePoint<G1Curve>&) { return true; }
};

struct G2Curve {
  using Field = Fq2;
  static const Fq2& b() { return twist_b(); }
  static const CurvePoint<G2Curve>& generator();
  static bool in_subgroup(const CurvePoint<G2Curve>& p);
};

using G1Point = CurvePoint<G1Curve>;
using G2Point = CurvePoint<G2Curve>;

/// Cofactor 2p - r of the G2 twist group.
U256 g2_cofactor();

/// Sum of k_i * P_i. Sizes must match.
G1Point multi_exp(std::span<const G1Point> bases, std::span<const Scalar> scalars);
G2Point multi_exp(std::span<const G2Point> bases, std::span<const Scalar> scalars);

}  // namespace zkc::algebra
