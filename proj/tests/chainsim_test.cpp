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
#include <nlohmann/json.hpp>

#include <stdexcept>

#include "fixtures.hpp"
#include "support.hpp"
#include "zkc/chainsim.hpp"
#include "zkc/error.hpp"

namespace zkc::chain {
namespace {

using registry::Address;
using registry::ScopeId;
using testing::AgeFixture;
using testing::kJan2025;
using testing::seeded;

// Hand-expanded from the precompile schedule: 16 gas per nonzero byte over
// selector(4) + proof(256) + inputs(32 n) + duration(32) + scope(32).
constexpr std::uint64_t kExpectedGrant3 = 21'000 + 16 * (4 + 256 + 96 + 32 + 32) + 3 * (6'000 + 150) +
                                          (45'000 + 4 * 34'000) + 2 * 20'000 + 3'500;
constexpr std::uint64_t kExpectedRevoke = 21'000 + 16 * (4 + 32) + 2 * 5'000 + 3'500;

TEST(GasModel, GrantComponents) {
  const auto r = estimate_grant_gas(3);
  EXPECT_EQ(r.kind, TxKind::Grant);
  EXPECT_EQ(r.intrinsic_gas, 21'000U);
  EXPECT_EQ(r.calldata_gas, 6'720U);
  EXPECT_EQ(r.multi_exp_gas, 18'450U);
  EXPECT_EQ(r.pairing_gas, 181'000U);
  EXPECT_EQ(r.storage_gas, 40'000U);
  EXPECT_EQ(r.overhead_gas, 3'500U);
  EXPECT_EQ(r.total_gas, kExpectedGrant3);
  EXPECT_EQ(r.total_gas, 270'670U);
  EXPECT_EQ(r.total_gas, r.component_sum());
}

TEST(GasModel, GrantWithinFifteenPercentOfReference) {
  const auto total = estimate_grant_gas(3).total_gas;
  EXPECT_GE(total, 204'435U);
  EXPECT_LE(total, 276'589U);
}

TEST(GasModel, ScalesWithPublicInputs) {
  const auto r0 = estimate_grant_gas(0);
  EXPECT_EQ(r0.multi_exp_gas, 0U);
  EXPECT_EQ(r0.pairing_gas, 181'000U);
  for (std::size_t n = 0; n < 8; ++n) {
    const auto r = estimate_grant_gas(n);
    EXPECT_EQ(r.calldata_gas, 16 * (324 + 32 * n));
    EXPECT_EQ(r.multi_exp_gas, 6'150 * n);
    EXPECT_EQ(r.total_gas, r.component_sum());
  }
}

TEST(GasModel, RevokeHasNoCryptography) {
  const auto r = estimate_revoke_gas();
  EXPECT_EQ(r.kind, TxKind::Revoke);
  EXPECT_EQ(r.pairing_gas, 0U);
  EXPECT_EQ(r.multi_exp_gas, 0U);
  EXPECT_EQ(r.total_gas, kExpectedRevoke);
  EXPECT_EQ(r.total_gas, r.component_sum());
}

TEST(QuoteCost, ReferenceEconomics) {
  const auto l1 = quote_cost(240'512, 20, 3000, Layer::L1);
  EXPECT_NEAR(l1.usd, 14.43, 0.01);
  EXPECT_LE(std::abs(l1.usd - 15.0) / 15.0, 0.05);
  EXPECT_DOUBLE_EQ(l1.layer_factor, 1.0);
  const auto l2 = quote_cost(240'512, 20, 3000, Layer::L2);
  EXPECT_NEAR(l2.usd, 0.36, 0.005);
  EXPECT_LT(l2.usd, 0.50);
  EXPECT_DOUBLE_EQ(l2.layer_factor, 1.0 / 40.0);
  EXPECT_NEAR(quote_cost(240'512, 20, 3000, Layer::L2, 0.5).usd, l1.usd / 2, 1e-9);
}

TEST(QuoteCost, ZeroGasAndBadInputs) {
  EXPECT_EQ(quote_cost(0, 123, 4567, Layer::L1).usd, 0.0);
  EXPECT_EQ(quote_cost(0, 1, 1, Layer::L2).usd, 0.0);
  EXPECT_THROW(quote_cost(1, -1, 3000, Layer::L1), std::invalid_argument);
  EXPECT_THROW(quote_cost(1, 20, -3000, Layer::L1), std::invalid_argument);
  EXPECT_THROW(quote_cost(1, 20, 3000, Layer::L2, -0.1), std::invalid_argument);
}

TEST(QuoteCost, LinearInEachArgument) {
  const double base = quote_cost(100'000, 10, 2000, Layer::L1).usd;
  EXPECT_NEAR(quote_cost(200'000, 10, 2000, Layer::L1).usd, 2 * base, 1e-9);
  EXPECT_NEAR(quote_cost(100'000, 30, 2000, Layer::L1).usd, 3 * base, 1e-9);
  EXPECT_NEAR(quote_cost(100'000, 10, 500, Layer::L1).usd, base / 4, 1e-9);
}

class ChainTest : public ::testing::Test {
 protected:
  const AgeFixture& fx = AgeFixture::get();
  SeededRandom rng = seeded("chainsim");
  ChainState chain{fx.keys.vk, kJan2025 + 3600};
  const Address alice = Address::from_label("alice");
  const ScopeId dex = ScopeId::from_label("dex");

  GrantTx grant(const AgeFixture::Submission& sub, std::int64_t duration) const {
    return GrantTx{alice, dex, sub.proof, sub.inputs, duration};
  }
};

TEST_F(ChainTest, ValidGrantMintsRecord) {
  const auto r = chain.submit_tx(grant(fx.make(2025, 18, 2000, rng), 1000));
  EXPECT_TRUE(r.success);
  EXPECT_TRUE(r.error.empty());
  EXPECT_EQ(r.total_gas, estimate_grant_gas(3).total_gas);
  EXPECT_EQ(r.block_number, 1U);
  EXPECT_EQ(chain.block_number(), 1U);
  EXPECT_TRUE(chain.validate_access(alice, dex));
  EXPECT_EQ(chain.registry().records().size(), 1U);
}

TEST_F(ChainTest, InvalidGrantChargedButRecordAbsent) {
  const auto sub = fx.make_invalid(rng);
  // Registry-only path on a fresh registry.
  registry::Registry reference(fx.keys.vk);
  Errc ref_error = Errc::ExpectationFailed;
  try {
    reference.grant_access(alice, dex, sub.proof, sub.inputs, 1000, chain.timestamp());
  } catch (const Error& e) {
    ref_error = e.code();
  }
  EXPECT_EQ(ref_error, Errc::InvalidProof);

  const auto r = chain.submit_tx(grant(sub, 1000));
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.error, errc_name(ref_error));
  EXPECT_EQ(chain.registry().records(), reference.records());
  EXPECT_FALSE(chain.validate_access(alice, dex));
  // Verification work is still paid; only storage is skipped.
  const auto full = estimate_grant_gas(3);
  EXPECT_EQ(r.pairing_gas, full.pairing_gas);
  EXPECT_EQ(r.multi_exp_gas, full.multi_exp_gas);
  EXPECT_EQ(r.calldata_gas, full.calldata_gas);
  EXPECT_EQ(r.storage_gas, 0U);
  EXPECT_EQ(r.total_gas, full.total_gas - full.storage_gas);
  EXPECT_EQ(r.total_gas, r.component_sum());
  EXPECT_EQ(chain.block_number(), 1U);
}

TEST_F(ChainTest, PreVerifierRejectionSkipsPairingGas) {
  const auto r = chain.submit_tx(grant(fx.make(2025, 18, 2000, rng), 0));
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.error, errc_name(Errc::InvalidDuration));
  EXPECT_EQ(r.pairing_gas, 0U);
  EXPECT_EQ(r.total_gas, r.component_sum());
  const auto stale = chain.submit_tx(grant(fx.make(2024, 18, 2000, rng), 10));
  EXPECT_EQ(stale.error, errc_name(Errc::StaleStatement));
  EXPECT_TRUE(chain.registry().records().empty());
}

TEST_F(ChainTest, RevokeReceipts) {
  const auto none = chain.submit_tx(RevokeTx{alice, dex});
  EXPECT_FALSE(none.success);
  EXPECT_EQ(none.error, errc_name(Errc::NoActiveGrant));
  EXPECT_EQ(none.pairing_gas, 0U);
  EXPECT_EQ(none.storage_gas, 0U);

  chain.submit_tx(grant(fx.make(2025, 18, 2000, rng), 1000));
  const auto ok = chain.submit_tx(RevokeTx{alice, dex});
  EXPECT_TRUE(ok.success);
  EXPECT_EQ(ok, [&] {
    auto e = estimate_revoke_gas();
    e.block_number = 3;
    return e;
  }());
  EXPECT_FALSE(chain.validate_access(alice, dex));
  EXPECT_EQ(chain.block_number(), 3U);
}

TEST_F(ChainTest, AdvanceTimeBoundary) {
  constexpr std::int64_t kD = 5000;
  chain.submit_tx(grant(fx.make(2025, 18, 2000, rng), kD));
  const auto t0 = chain.timestamp();
  chain.advance_time(0);
  EXPECT_EQ(chain.timestamp(), t0);
  EXPECT_TRUE(chain.validate_access(alice, dex));
  chain.advance_time(kD - 1);
  EXPECT_TRUE(chain.validate_access(alice, dex));
  chain.advance_time(1);
  EXPECT_FALSE(chain.validate_access(alice, dex));
  // Expiry is lazy: the record stays until overwritten or revoked.
  EXPECT_EQ(chain.registry().records().size(), 1U);
  EXPECT_EQ(chain.block_number(), 1U);
}

TEST_F(ChainTest, NegativeTimeStep) {
  const auto t0 = chain.timestamp();
  try {
    chain.advance_time(-1);
    FAIL() << "expected NegativeTimeStep";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NegativeTimeStep);
  }
  EXPECT_EQ(chain.timestamp(), t0);
}

TEST_F(ChainTest, ReceiptsAreAppendOnly) {
  const auto first = chain.submit_tx(grant(fx.make(2025, 18, 2000, rng), 1000));
  const GasReceipt snapshot = chain.receipts()[0];
  chain.submit_tx(RevokeTx{alice, dex});
  chain.submit_tx(RevokeTx{alice, dex});
  ASSERT_EQ(chain.receipts().size(), 3U);
  EXPECT_EQ(chain.receipts()[0], snapshot);
  EXPECT_EQ(first, snapshot);
  for (std::size_t i = 0; i < chain.receipts().size(); ++i) {
    EXPECT_EQ(chain.receipts()[i].block_number, i + 1);
    EXPECT_EQ(chain.receipts()[i].total_gas, chain.receipts()[i].component_sum());
  }
}

TEST_F(ChainTest, DeterministicReplay) {
  const auto s1 = fx.make(2025, 18, 2000, rng);
  const auto s2 = fx.make_invalid(rng);
  const Address bob = Address::from_label("bob");
  auto replay = [&] {
    ChainState c(fx.keys.vk, kJan2025);
    c.submit_tx(grant(s1, 700));
    c.advance_time(300);
    c.submit_tx(GrantTx{bob, dex, s2.proof, s2.inputs, 50});
    c.submit_tx(RevokeTx{bob, dex});
    c.advance_time(400);
    c.submit_tx(RevokeTx{alice, dex});
    return c.save();
  };
  EXPECT_EQ(replay(), replay());
}

TEST_F(ChainTest, SaveLoadRoundTrip) {
  chain.submit_tx(grant(fx.make(2025, 18, 2000, rng), 1000));
  chain.submit_tx(RevokeTx{Address::from_label("carol"), dex});
  chain.advance_time(42);
  const auto text = chain.save();
  const auto loaded = ChainState::load(text, fx.keys.vk);
  EXPECT_EQ(loaded.timestamp(), chain.timestamp());
  EXPECT_EQ(loaded.block_number(), chain.block_number());
  EXPECT_EQ(loaded.registry().records(), chain.registry().records());
  ASSERT_EQ(loaded.receipts().size(), chain.receipts().size());
  for (std::size_t i = 0; i < loaded.receipts().size(); ++i) EXPECT_EQ(loaded.receipts()[i], chain.receipts()[i]);
  EXPECT_EQ(loaded.save(), text);
  EXPECT_TRUE(loaded.validate_access(alice, dex));
}

TEST_F(ChainTest, LoadRejectsCorruptSnapshots) {
  chain.submit_tx(grant(fx.make(2025, 18, 2000, rng), 1000));
  auto doc = nlohmann::json::parse(chain.save());
  auto expect_io = [&](const std::string& text) {
    try {
      ChainState::load(text, fx.keys.vk);
      ADD_FAILURE() << "accepted: " << text.substr(0, 80);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::IoFailure);
    }
  };
  expect_io("not json");
  expect_io("{}");
  auto bad_total = doc;
  bad_total["receipts"][0]["totalGas"] = 1;
  expect_io(bad_total.dump());
  auto bad_subject = doc;
  bad_subject["records"][0]["subject"] = "abcd";
  expect_io(bad_subject.dump());
}

TEST_F(ChainTest, GasReportSummary) {
  chain.submit_tx(grant(fx.make(2025, 18, 2000, rng), 1000));
  chain.submit_tx(RevokeTx{alice, dex});
  const auto doc = nlohmann::json::parse(export_gas_report(chain.receipts()));
  EXPECT_EQ(doc.at("format"), "zkc-gas-report-v1");
  ASSERT_EQ(doc.at("receipts").size(), 2U);
  const auto& summary = doc.at("summary");
  EXPECT_EQ(summary.at("count"), 2);
  EXPECT_EQ(summary.at("maxTotalGas"), kExpectedGrant3);
  const double mean = (kExpectedGrant3 + kExpectedRevoke) / 2.0;
  EXPECT_DOUBLE_EQ(summary.at("meanTotalGas").get<double>(), mean);
  const double mean_rounded = static_cast<double>(static_cast<std::uint64_t>(mean + 0.5));
  EXPECT_NEAR(summary.at("meanUsdL1").get<double>(), mean_rounded * 20e-9 * 3000, 1e-9);
  EXPECT_NEAR(summary.at("meanUsdL2").get<double>(), mean_rounded * 20e-9 * 3000 / 40, 1e-9);

  const auto empty = nlohmann::json::parse(export_gas_report({}));
  EXPECT_EQ(empty.at("summary").at("count"), 0);
  EXPECT_EQ(empty.at("summary").at("meanUsdL1").get<double>(), 0.0);
}

}  // namespace
}  // namespace zkc::chain
