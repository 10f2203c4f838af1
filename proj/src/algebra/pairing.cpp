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

#include "zkc/algebra/pairing.hpp"

#include <atomic>
#include <vector>

namespace zkc::algebra {

namespace {

std::atomic<std::uint64_t> g_pairing_count{0};

// 6u + 2, the optimal ate loop count.
constexpr U256 kAteLoop = U256::from_hex("19d797039be763ba8");

// Sparse line value l0 + l1 w + l3 w^3 with l0 in Fq.
// l0 + l1 w + l3 w^3.
struct Line {
  Fq2 l0, l1, l3;
};

// Fq6 times (b0 + b1 v).
Fq6 mul_by_01(const Fq6& x, const Fq2& b0, const Fq2& b1) {
  return {x.c0 * b0 + (x.c2 * b1).mul_by_xi(), x.c0 * b1 + x.c1 * b0, x.c1 * b1 + x.c2 * b0};
}

Fq6 mul_by_fq2(const Fq6& x, const Fq2& s) { return {x.c0 * s, x.c1 * s, x.c2 * s}; }

Fq12 mul_by_line(const Fq12& f, const Line& l) {
  // l = a + b w, a = (l0, 0, 0), b = (l1, l3, 0).
  const Fq6 f0a = mul_by_fq2(f.c0, l.l0);
  const Fq6 f1b = mul_by_01(f.c1, l.l1, l.l3);
  const Fq6 f0b = mul_by_01(f.c0, l.l1, l.l3);
  const Fq6 f1a = mul_by_fq2(f.c1, l.l0);
  return {f0a + f1b.mul_by_v(), f0b + f1a};
}

// Affine point on the twist used as the Miller loop accumulator.
struct TwistAffine {
  Fq2 x, y;
  bool infinity = false;
};

// The twisted point (x, y) maps to (x w^2, y w^3) on the curve over Fq12, so a
// twist-side slope lambda becomes lambda w and the line through T evaluated
// at P = (xp, yp) is  yp - lambda xp w + (lambda xT - yT) w^3.
Line line_from_slope(const Fq2& lambda, const TwistAffine& t, const Fq& xp, const Fq& yp) {
  return {Fq2{yp, Fq::zero()}, -(lambda * xp), lambda * t.x - t.y};
}

// Vertical lines land in Fq6 and vanish under the final exponentiation; they
// are represented by the neutral line.
Line neutral_line() { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }

Line double_step(TwistAffine& t, const Fq& xp, const Fq& yp) {
  if (t.infinity) return neutral_line();
  if (t.y.is_zero()) {
    t.infinity = true;
    return neutral_line();
  }
  const Fq2 x2 = t.x.square();
  const Fq2 lambda = (x2.dbl() + x2) * t.y.dbl().inverse();
  const Line l = line_from_slope(lambda, t, xp, yp);
  const Fq2 x3 = lambda.square() - t.x.dbl();
  t.y = lambda * (t.x - x3) - t.y;
  t.x = x3;
  return l;
}

Line add_step(TwistAffine& t, const TwistAffine& q, const Fq& xp, const Fq& yp) {
  if (q.infinity) return neutral_line();
  if (t.infinity) {
    t = q;
    return neutral_line();
  }
  if (t.x == q.x) {
    if (t.y == q.y) return double_step(t, xp, yp);
    t.infinity = true;
    return neutral_line();
  }
  const Fq2 lambda = (q.y - t.y) * (q.x - t.x).inverse();
  const Line l = line_from_slope(lambda, t, xp, yp);
  const Fq2 x3 = lambda.square() - t.x - q.x;
  t.y = lambda * (t.x - x3) - t.y;
  t.x = x3;
  return l;
}

// Frobenius endomorphism on the twist: (x, y) -> (conj(x) gamma2, conj(y) gamma3).
TwistAffine twist_frobenius(const TwistAffine& q) {
  return {q.x.conjugate() * frobenius_gamma(2), q.y.conjugate() * frobenius_gamma(3), q.infinity};
}

// Homogeneous projective accumulator: (X : Y : Z) is (X/Z, Y/Z); Z = 0 is infinity.
struct TwistProjective {
  Fq2 x, y, z;
  bool is_infinity() const { return z.is_zero(); }
};

// The projective steps return the affine line scaled by an Fq2 factor, which
// the final exponentiation removes.
Line double_step(TwistProjective& t, const Fq& xp, const Fq& yp) {
  if (t.is_infinity()) return neutral_line();
  if (t.y.is_zero()) {
    t.z = Fq2::zero();
    return neutral_line();
  }
  const Fq2 xx = t.x.square();
  const Fq2 w = xx.dbl() + xx;
  const Fq2 s = (t.y * t.z).dbl();
  // Affine line times 2 Y Z^2.
  const Line l{(s * t.z) * yp, -((w * t.z) * xp), w * t.x - (t.y * s)};
  const Fq2 ss = s.square();
  const Fq2 r = t.y * s;
  const Fq2 rr = r.square();
  const Fq2 b = (t.x + r).square() - xx - rr;
  const Fq2 h = w.square() - b.dbl();
  t.x = h * s;
  t.y = w * (b - h) - rr.dbl();
  t.z = s * ss;
  return l;
}

Line add_step(TwistProjective& t, const TwistAffine& q, const Fq& xp, const Fq& yp) {
  if (q.infinity) return neutral_line();
  if (t.is_infinity()) {
    t = {q.x, q.y, Fq2::one()};
    return neutral_line();
  }
  const Fq2 theta = q.y * t.z - t.y;
  const Fq2 nu = q.x * t.z - t.x;
  if (nu.is_zero()) {
    if (theta.is_zero()) return double_step(t, xp, yp);
    t.z = Fq2::zero();
    return neutral_line();
  }
  // Affine line times nu.
  const Line l{nu * yp, -(theta * xp), theta * q.x - nu * q.y};
  const Fq2 vv = nu.square();
  const Fq2 vvv = nu * vv;
  const Fq2 r = vv * t.x;
  const Fq2 a = theta.square() * t.z - vvv - r.dbl();
  t.x = nu * a;
  t.y = theta * (r - a) - vvv * t.y;
  t.z = vvv * t.z;
  return l;
}

template <typename Acc>
struct LoopState {
  Fq xp, yp;
  TwistAffine q;
  Acc t;
};

template <typename Acc>
Fq12 run_miller_loop(std::span<const PairingInput> pairs, Acc (*lift)(const TwistAffine&)) {
  std::vector<LoopState<Acc>> states;
  states.reserve(pairs.size());
  for (const auto& [p, q] : pairs) {
    g_pairing_count.fetch_add(1, std::memory_order_relaxed);
    if (p.is_infinity() || q.is_infinity()) continue;
    const auto pa = p.to_affine();
    const auto qa = q.to_affine();
    const TwistAffine qt{qa.x, qa.y, false};
    states.push_back({pa.x, pa.y, qt, lift(qt)});
  }

  Fq12 f = Fq12::one();
  if (states.empty()) return f;

  for (std::size_t i = kAteLoop.bit_length() - 1; i-- > 0;) {
    f = f.square();
    for (auto& s : states) f = mul_by_line(f, double_step(s.t, s.xp, s.yp));
    if (kAteLoop.bit(i)) {
      for (auto& s : states) f = mul_by_line(f, add_step(s.t, s.q, s.xp, s.yp));
    }
  }

  // Two extra lines through Q1 = pi(Q) and -Q2 = -pi^2(Q).
  for (auto& s : states) {
    const TwistAffine q1 = twist_frobenius(s.q);
    TwistAffine q2 = twist_frobenius(q1);
    q2.y = -q2.y;
    f = mul_by_line(f, add_step(s.t, q1, s.xp, s.yp));
    f = mul_by_line(f, add_step(s.t, q2, s.xp, s.yp));
  }
  return f;
}

}  // namespace

namespace detail {

Fq12 miller_loop(std::span<const PairingInput> pairs) {
  return run_miller_loop<TwistProjective>(
      pairs, [](const TwistAffine& q) { return TwistProjective{q.x, q.y, Fq2::one()}; });
}

Fq12 miller_loop_affine(std::span<const PairingInput> pairs) {
  return run_miller_loop<TwistAffine>(pairs, [](const TwistAffine& q) { return q; });
}

Fq12 final_exponentiation(const Fq12& in) {
  // Easy part: in^((p^6 - 1)(p^2 + 1)).
  Fq12 t1 = in.conjugate() * in.inverse();
  t1 = t1.frobenius().frobenius() * t1;

  // Hard part: (p^4 - p^2 + 1) / r expressed through u and the Frobenius.
  const Fq12 fp = t1.frobenius();
  const Fq12 fp2 = fp.frobenius();
  const Fq12 fp3 = fp2.frobenius();

  const Fq12 fu = t1.pow_u64(kBnU);
  const Fq12 fu2 = fu.pow_u64(kBnU);
  const Fq12 fu3 = fu2.pow_u64(kBnU);

  const Fq12 y3 = fu.frobenius().conjugate();
  const Fq12 fu2p = fu2.frobenius();
  const Fq12 fu3p = fu3.frobenius();
  const Fq12 y2 = fu2.frobenius().frobenius();

  const Fq12 y0 = fp * fp2 * fp3;
  const Fq12 y1 = t1.conjugate();
  const Fq12 y5 = fu2.conjugate();
  const Fq12 y4 = (fu * fu2p).conjugate();
  const Fq12 y6 = (fu3 * fu3p).conjugate();

  Fq12 t0 = y6.square() * y4 * y5;
  Fq12 t = y3 * y5 * t0;
  t0 = t0 * y2;
  t = (t.square() * t0).square();
  t0 = t * y1;
  t = t * y0;
  t0 = t0.square() * t;
  return t0;
}

}  // namespace detail

GtElement multi_pairing(std::span<const PairingInput> pairs) {
  return GtElement(detail::final_exponentiation(detail::miller_loop(pairs)));
}

GtElement pairing(const G1Point& p, const G2Point& q) {
  const PairingInput in[] = {{p, q}};
  return multi_pairing(in);
}

bool pairing_product_is_one(std::span<const PairingInput> pairs) { return multi_pairing(pairs).is_identity(); }

std::uint64_t pairing_count() { return g_pairing_count.load(std::memory_order_relaxed); }

}  // namespace zkc::algebra
