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
#include <span>
#include <utility>

#include "zkc/algebra/curve.hpp"
#include "zkc/algebra/fields.hpp"

namespace zkc::algebra {

/// Element of the order-r target group inside Fq12.
class GtElement {
 public:
  GtElement() : value_(Fq12::one()) {}
  explicit GtElement(const Fq12& v) : value_(v) {}

  static GtElement identity() { return GtElement(); }

  const Fq12& value() const { return value_; }
  bool is_identity() const { return value_.is_one(); }

  GtElement operator*(const GtElement& o) const { return GtElement(value_ * o.value_); }
  GtElement pow(const Scalar& k) const { return GtElement(value_.pow(k.to_canonical())); }

  friend bool operator==(const GtElement&, const GtElement&) = default;

 private:
  Fq12 value_;
};

using PairingInput = std::pair<G1Point, G2Point>;

/// Optimal ate pairing e(P, Q), including final exponentiation.
GtElement pairing(const G1Point& p, const G2Point& q);

/// Product of pairings sharing one Miller loop accumulator and one final
/// exponentiation.
GtElement multi_pairing(std::span<const PairingInput> pairs);

/// True iff the product of the pairings is the identity (the precompile check).
bool pairing_product_is_one(std::span<const PairingInput> pairs);

/// Number of (P, Q) pairs fed through a Miller loop since process start.
std::uint64_t pairing_count();

namespace detail {
Fq12 miller_loop(std::span<const PairingInput> pairs);
/// Same loop with affine accumulators; agrees with miller_loop after final exponentiation.
Fq12 miller_loop_affine(std::span<const PairingInput> pairs);
Fq12 final_exponentiation(const Fq12& f);
}  // namespace detail

}  // namespace zkc::algebra
