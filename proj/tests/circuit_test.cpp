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

#include <gtest/gtest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "support.hpp"
#include "zkc/circuit.hpp"
#include "zkc/error.hpp"

namespace zkc::circuit {
namespace {

using testing::seeded;

Scalar s(std::uint64_t v) { return Scalar::from_u64(v); }

AgeStatement statement(std::uint64_t year, std::uint64_t threshold, const Scalar& salt) {
  return {s(year), s(threshold), salt.square()};
}

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ExpectationFailed;
}

// Independent wire counter: every index referenced by some constraint.
std::size_t walk_wire_count(const ConstraintSystem& cs) {
  std::set<std::size_t> seen;
  for (const auto& c : cs.constraints()) {
    for (const auto* lc : {&c.a, &c.b, &c.c}) {
      for (const auto& t : lc->terms()) seen.insert(t.wire);
    }
  }
  return seen.size();
}

TEST(AgeCircuit, ConstraintCountFormula) {
  for (unsigned w : {1U, 4U, 8U, 16U, 32U}) {
    const auto cs = build_age_circuit(w);
    EXPECT_EQ(cs.num_constraints(), w + 2) << w;
    EXPECT_EQ(cs.num_public(), 3U);
    EXPECT_EQ(cs.bit_width(), w);
  }
}

TEST(AgeCircuit, WireCountByConstraintWalk) {
  const auto cs = build_age_circuit(8);
  // 1 constant + 3 public + birth year + salt + 8 bits.
  EXPECT_EQ(walk_wire_count(cs), 14U);
  EXPECT_EQ(cs.num_variables(), 14U);
  for (unsigned w : {1U, 4U, 16U}) EXPECT_EQ(walk_wire_count(build_age_circuit(w)), 6U + w);
}

TEST(AgeCircuit, BitWidthBounds) {
  EXPECT_EQ(error_of([] { build_age_circuit(0); }), Errc::InvalidBitWidth);
  EXPECT_EQ(error_of([] { build_age_circuit(65); }), Errc::InvalidBitWidth);
  EXPECT_EQ(build_age_circuit(64).num_constraints(), 66U);
  EXPECT_EQ(build_age_circuit(1).num_constraints(), 3U);
}

TEST(Witness, WorkedExample) {
  const auto cs = build_age_circuit(8);
  const auto w = synthesize_witness(cs, statement(2025, 18, s(3)), {s(2000), s(3)});
  ASSERT_EQ(w.values.size(), 14U);
  EXPECT_EQ(w.values[wires::kOne], Scalar::one());
  EXPECT_EQ(w.values[wires::kSaltSquared], s(9));
  const std::uint64_t bits[8] = {1, 1, 1, 0, 0, 0, 0, 0};
  for (unsigned i = 0; i < 8; ++i) EXPECT_EQ(w.values[wires::kFirstBit + i], s(bits[i])) << i;
  EXPECT_TRUE(check_witness(cs, w));
  const auto pub = w.public_inputs(cs);
  ASSERT_EQ(pub.size(), 3U);
  EXPECT_EQ(pub[0], s(2025));
  EXPECT_EQ(pub[1], s(18));
  EXPECT_EQ(pub[2], s(9));
}

TEST(Witness, BoundaryAndFailures) {
  const auto cs = build_age_circuit(8);
  const auto edge = synthesize_witness(cs, statement(2025, 18, s(3)), {s(2007), s(3)});
  for (unsigned i = 0; i < 8; ++i) EXPECT_TRUE(edge.values[wires::kFirstBit + i].is_zero());
  EXPECT_TRUE(check_witness(cs, edge));

  EXPECT_EQ(error_of([&] { synthesize_witness(cs, statement(2025, 18, s(3)), {s(2010), s(3)}); }),
            Errc::PredicateUnsatisfied);
  EXPECT_EQ(error_of([&] { synthesize_witness(cs, {s(2025), s(18), s(10)}, {s(2000), s(3)}); }), Errc::SaltMismatch);
  EXPECT_EQ(error_of([&] { synthesize_witness(cs, statement(2025, 18, s(3)), {s(1700), s(3)}); }),
            Errc::RangeOverflow);
  EXPECT_EQ(error_of([&] { synthesize_witness(cs, statement(2025, 18, Scalar::zero()), {s(2000), Scalar::zero()}); }),
            Errc::InvalidStatement);
  EXPECT_EQ(error_of([&] { synthesize_witness(cs, {-s(1), s(18), s(9)}, {s(2000), s(3)}); }), Errc::InvalidStatement);
}

TEST(Witness, CheckAgreesWithSynthesisOnRandomInstances) {
  auto rng = seeded("witness-random");
  const auto cs = build_age_circuit(8);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t threshold = random_u64(rng) % 30;
    const std::uint64_t diff = random_u64(rng) % 256;
    const std::uint64_t year = 2000 + random_u64(rng) % 100;
    const Scalar salt = random_nonzero_scalar(rng);
    const auto w = synthesize_witness(cs, statement(year, threshold, salt), {s(year - threshold - diff), salt});
    ASSERT_TRUE(check_witness(cs, w));
  }
}

TEST(Witness, TamperedAssignmentsFail) {
  const auto cs = build_age_circuit(8);
  const auto good = synthesize_witness(cs, statement(2025, 18, s(3)), {s(2000), s(3)});

  auto bit2 = good;
  bit2.values[wires::kFirstBit + 3] = s(2);
  EXPECT_FALSE(check_witness(cs, bit2));

  auto salt_sq = good;
  salt_sq.values[wires::kSaltSquared] += Scalar::one();
  EXPECT_FALSE(check_witness(cs, salt_sq));

  auto birth = good;
  birth.values[wires::kBirthYear] += Scalar::one();
  EXPECT_FALSE(check_witness(cs, birth));

  auto shorter = good;
  shorter.values.pop_back();
  EXPECT_EQ(error_of([&] { check_witness(cs, shorter); }), Errc::LengthMismatch);
}

TEST(Witness, ExhaustiveBitWidthFour) {
  const auto cs = build_age_circuit(4);
  for (std::int64_t diff = -20; diff < 36; ++diff) {
    const std::int64_t birth = 2025 - 18 - diff;
    const bool in_range = diff >= 0 && diff < 16;
    bool synthesized = true;
    try {
      const auto w = synthesize_witness(cs, statement(2025, 18, s(5)), {s(static_cast<std::uint64_t>(birth)), s(5)});
      EXPECT_TRUE(check_witness(cs, w));
    } catch (const Error& e) {
      synthesized = false;
      EXPECT_EQ(e.code(), diff < 0 ? Errc::PredicateUnsatisfied : Errc::RangeOverflow);
    }
    EXPECT_EQ(synthesized, in_range) << diff;
    EXPECT_EQ(testing::any_bits_satisfy(cs, statement(2025, 18, s(5)), {s(static_cast<std::uint64_t>(birth)), s(5)}),
              in_range)
        << diff;
  }
}

TEST(ConstraintSystemType, RejectsOutOfRangeWires) {
  std::vector<Constraint> cons(1);
  cons[0].a.add(5, Scalar::one());
  EXPECT_THROW(ConstraintSystem(cons, 1, 5), std::invalid_argument);
  EXPECT_THROW(ConstraintSystem({}, 4, 4), std::invalid_argument);
  EXPECT_NO_THROW(ConstraintSystem(cons, 1, 6));
}

TEST(LinearCombinationType, NormalizeMergesAndDrops) {
  LinearCombination lc;
  lc.add(3, s(2)).add(1, s(1)).add(3, s(5)).add(2, s(4)).add(2, -s(4));
  lc.normalize();
  ASSERT_EQ(lc.terms().size(), 2U);
  EXPECT_EQ(lc.terms()[0], (Term{1, s(1)}));
  EXPECT_EQ(lc.terms()[1], (Term{3, s(7)}));
  const std::vector<Scalar> assignment = {s(1), s(10), s(0), s(100)};
  EXPECT_EQ(lc.evaluate(assignment), s(710));
}

TEST(Export, JsonDocument) {
  const auto cs = build_age_circuit(2);
  const auto doc = nlohmann::json::parse(export_constraint_system(cs));
  EXPECT_EQ(doc["format"], "zkc-r1cs-v1");
  EXPECT_EQ(doc["numPublic"], 3);
  EXPECT_EQ(doc["numVariables"], 8);
  EXPECT_EQ(doc["bitWidth"], 2);
  ASSERT_EQ(doc["constraints"].size(), 4U);
  for (const auto& c : doc["constraints"]) {
    for (const char* side : {"a", "b", "c"}) {
      for (const auto& term : c[side]) {
        EXPECT_LT(term[0].get<std::size_t>(), 8U);
        EXPECT_TRUE(Scalar::from_decimal(term[1].get<std::string>()).has_value());
      }
    }
  }
}

}  // namespace
}  // namespace zkc::circuit
