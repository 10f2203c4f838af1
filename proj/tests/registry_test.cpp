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

#include "fixtures.hpp"
#include "lifecycle.hpp"
#include "support.hpp"
#include "zkc/algebra/pairing.hpp"
#include "zkc/error.hpp"
#include "zkc/hex.hpp"
#include "zkc/registry.hpp"

namespace zkc::registry {
namespace {

using testing::AgeFixture;
using testing::kJan2025;
using testing::seeded;

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ExpectationFailed;
}

class RegistryTest : public ::testing::Test {
 protected:
  const AgeFixture& fx = AgeFixture::get();
  SeededRandom rng = seeded("registry");
  Registry reg{fx.keys.vk};
  const Address alice = Address::from_label("alice");
  const Address bob = Address::from_label("bob");
  const ScopeId dex = ScopeId::from_label("dex");
};

TEST(Identifiers, FromLabel) {
  EXPECT_EQ(to_hex(Address::from_label("alice").bytes), "5dad7600c5d89fe3824ffa99ec1c3eb8bf3b0501");
  EXPECT_EQ(to_hex(ScopeId::from_label("dex").bytes),
            "1213e41cc9bb81fb49569b7e7bf17d6054f5c51803ac96e7af6158f61a7214e2");
}

TEST(CalendarYear, UtcBoundaries) {
  EXPECT_EQ(calendar_year(0), 1970);
  EXPECT_EQ(calendar_year(kJan2025), 2025);
  EXPECT_EQ(calendar_year(kJan2025 - 1), 2024);
  EXPECT_EQ(calendar_year(1'767'225'599), 2025);  // 2025-12-31T23:59:59Z
  EXPECT_EQ(calendar_year(1'767'225'600), 2026);
}

TEST(StatementDigest, KeccakOfBigEndianInputs) {
  const std::vector<Scalar> pub = {Scalar::from_u64(2025), Scalar::from_u64(18), Scalar::from_u64(9)};
  // Independent Keccak over the 96-byte concatenation.
  EXPECT_EQ(to_hex(statement_digest(pub)), "db95d51f71659e0ea32c5b8069731904b9ce19f41bf2221cf4824c556ef677b6");
}

TEST_F(RegistryTest, GrantMintsRecord) {
  const auto sub = fx.make(2025, 18, 2000, rng);
  const Timestamp t = kJan2025 + 1000;
  const auto rec = reg.grant_access(alice, dex, sub.proof, sub.inputs, 86'400, t);
  EXPECT_EQ(rec.subject, alice);
  EXPECT_EQ(rec.scope, dex);
  EXPECT_EQ(rec.granted_at, t);
  EXPECT_EQ(rec.expires_at, t + 86'400);
  EXPECT_EQ(rec.statement_digest, statement_digest(sub.inputs));
  EXPECT_EQ(reg.find(alice, dex), rec);
  EXPECT_TRUE(reg.validate_access(alice, dex, t));
}

TEST_F(RegistryTest, FailedGrantsLeaveStateUnchanged) {
  const auto good = fx.make(2025, 18, 2000, rng);
  reg.grant_access(alice, dex, good.proof, good.inputs, 100, kJan2025);
  const auto before = reg.records();

  const auto bad = fx.make_invalid(rng);
  EXPECT_EQ(error_of([&] { reg.grant_access(bob, dex, bad.proof, bad.inputs, 100, kJan2025); }), Errc::InvalidProof);
  EXPECT_EQ(error_of([&] { reg.grant_access(alice, dex, bad.proof, bad.inputs, 500, kJan2025); }),
            Errc::InvalidProof);
  EXPECT_EQ(error_of([&] { reg.grant_access(bob, dex, good.proof, good.inputs, 0, kJan2025); }),
            Errc::InvalidDuration);
  EXPECT_EQ(error_of([&] { reg.grant_access(bob, dex, good.proof, good.inputs, -5, kJan2025); }),
            Errc::InvalidDuration);
  EXPECT_EQ(error_of([&] { reg.grant_access(bob, dex, good.proof, std::span(good.inputs).first(2), 5, kJan2025); }),
            Errc::InvalidProof);
  EXPECT_EQ(reg.records(), before);
}

TEST_F(RegistryTest, StaleStatementRejected) {
  const auto old = fx.make(2024, 18, 2000, rng);
  EXPECT_EQ(error_of([&] { reg.grant_access(alice, dex, old.proof, old.inputs, 100, kJan2025); }),
            Errc::StaleStatement);
  EXPECT_NO_THROW(reg.grant_access(alice, dex, old.proof, old.inputs, 100, kJan2025 - 10));
  EXPECT_TRUE(reg.records().size() == 1);
}

TEST_F(RegistryTest, ExpiryIsExclusive) {
  const auto sub = fx.make(2025, 18, 2000, rng);
  const auto rec = reg.grant_access(alice, dex, sub.proof, sub.inputs, 100, kJan2025);
  EXPECT_TRUE(reg.validate_access(alice, dex, rec.expires_at - 1));
  EXPECT_FALSE(reg.validate_access(alice, dex, rec.expires_at));
  EXPECT_FALSE(reg.validate_access(bob, dex, kJan2025));
  EXPECT_FALSE(reg.validate_access(alice, ScopeId::from_label("other"), kJan2025));
}

TEST_F(RegistryTest, RevokeAndRegrant) {
  const auto sub = fx.make(2025, 18, 2000, rng);
  EXPECT_EQ(error_of([&] { reg.revoke_access(alice, dex); }), Errc::NoActiveGrant);
  reg.grant_access(alice, dex, sub.proof, sub.inputs, 100, kJan2025);
  reg.revoke_access(alice, dex);
  EXPECT_FALSE(reg.validate_access(alice, dex, kJan2025));
  EXPECT_EQ(error_of([&] { reg.revoke_access(alice, dex); }), Errc::NoActiveGrant);
  reg.grant_access(alice, dex, sub.proof, sub.inputs, 100, kJan2025 + 1);
  EXPECT_TRUE(reg.validate_access(alice, dex, kJan2025 + 1));
}

TEST_F(RegistryTest, RegrantOverwrites) {
  const auto sub = fx.make(2025, 18, 2000, rng);
  reg.grant_access(alice, dex, sub.proof, sub.inputs, 100, kJan2025);
  const auto rec = reg.grant_access(alice, dex, sub.proof, sub.inputs, 10, kJan2025 + 50);
  EXPECT_EQ(reg.records().size(), 1U);
  EXPECT_EQ(reg.find(alice, dex)->expires_at, kJan2025 + 60);
  EXPECT_EQ(rec.expires_at, kJan2025 + 60);
}

TEST_F(RegistryTest, RevokeOnlyTouchesCallersRecord) {
  const auto sub = fx.make(2025, 18, 2000, rng);
  reg.grant_access(alice, dex, sub.proof, sub.inputs, 100, kJan2025);
  EXPECT_EQ(error_of([&] { reg.revoke_access(bob, dex); }), Errc::NoActiveGrant);
  EXPECT_TRUE(reg.validate_access(alice, dex, kJan2025));
}

TEST_F(RegistryTest, ValidateDoesNoPairings) {
  const auto sub = fx.make(2025, 18, 2000, rng);
  reg.grant_access(alice, dex, sub.proof, sub.inputs, 100, kJan2025);
  const auto before = algebra::pairing_count();
  for (int i = 0; i < 1000; ++i) {
    (void)reg.validate_access(alice, dex, kJan2025 + i % 200);
    (void)reg.validate_access(bob, dex, kJan2025);
  }
  EXPECT_EQ(algebra::pairing_count(), before);
  // Sanity: grant does run pairings, so the counter is live.
  reg.grant_access(bob, dex, sub.proof, sub.inputs, 100, kJan2025);
  EXPECT_GT(algebra::pairing_count(), before);
}

TEST_F(RegistryTest, RestoreValidatesRecords) {
  AccessRecord r{alice, dex, 10, 5, {}};
  EXPECT_THROW(reg.restore({r}), std::invalid_argument);
  r.expires_at = 20;
  reg.restore({r});
  EXPECT_TRUE(reg.validate_access(alice, dex, 15));
}

TEST(Lifecycle, RandomInterleavingsMatchModel) {
  auto rng = seeded("lifecycle-unit");
  const auto st = testing::run_lifecycle(2000, rng);
  EXPECT_EQ(st.violations, 0U) << st.first_violation;
  EXPECT_GT(st.grants_ok, 0U);
  EXPECT_GT(st.grants_rejected, 0U);
  EXPECT_GT(st.revokes_ok, 0U);
  EXPECT_GT(st.revokes_empty, 0U);
}

// Operations by one subject never change another subject's validity trace.
TEST(Lifecycle, NoCrossSubjectInterference) {
  const auto& fx = AgeFixture::get();
  auto rng = seeded("cross-subject");
  const auto sub = fx.make(2025, 18, 2000, rng);
  const auto bad = fx.make_invalid(rng);
  const Address x = Address::from_label("x"), y = Address::from_label("y");
  const ScopeId scope = ScopeId::from_label("s");

  for (int trial = 0; trial < 5; ++trial) {
    Registry with_x(fx.keys.vk), without_x(fx.keys.vk);
    Timestamp now = kJan2025;
    for (int step = 0; step < 200; ++step) {
      const auto op = random_u64(rng) % 6;
      const auto dur = static_cast<std::int64_t>(1 + random_u64(rng) % 300);
      if (op == 0) {
        for (Registry* r : {&with_x, &without_x}) r->grant_access(y, scope, sub.proof, sub.inputs, dur, now);
      } else if (op == 1) {
        for (Registry* r : {&with_x, &without_x}) {
          try {
            r->revoke_access(y, scope);
          } catch (const Error&) {
          }
        }
      } else if (op == 2) {
        with_x.grant_access(x, scope, sub.proof, sub.inputs, dur, now);
      } else if (op == 3) {
        try {
          with_x.revoke_access(x, scope);
        } catch (const Error&) {
        }
      } else if (op == 4) {
        EXPECT_THROW(with_x.grant_access(x, scope, bad.proof, bad.inputs, dur, now), Error);
      } else {
        now += static_cast<Timestamp>(random_u64(rng) % 100);
      }
      ASSERT_EQ(with_x.validate_access(y, scope, now), without_x.validate_access(y, scope, now));
      ASSERT_EQ(with_x.find(y, scope), without_x.find(y, scope));
    }
  }
}

}  // namespace
}  // namespace zkc::registry
