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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "support.hpp"
#include "zkc/app/bench.hpp"
#include "zkc/app/cli.hpp"
#include "zkc/app/scenario.hpp"
#include "zkc/error.hpp"

namespace zkc::app {
namespace {

using testing::seeded;
using testing::TempDir;

ScenarioOptions seeded_options(std::string_view seed = "scenario-seed") {
  ScenarioOptions o;
  o.seed = std::vector<std::uint8_t>(seed.begin(), seed.end());
  return o;
}

std::vector<std::string> without_timing(const std::vector<std::string>& lines) {
  std::vector<std::string> out;
  for (const auto& l : lines) {
    if (!l.starts_with(kTimingPrefix)) out.push_back(l);
  }
  return out;
}

ScenarioResult run_text(std::string_view text, const ScenarioOptions& o = seeded_options()) {
  return run_scenario(parse_scenario(text), o);
}

Errc parse_error_of(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ExpectationFailed;
}

TEST(ScenarioParse, StepsAndComments) {
  const auto sc = parse_scenario(
      "# header\n"
      "\n"
      "genesis 1735689600\n"
      "account alice   # trailing comment\n"
      "set birthYear 1999\n"
      "setup bitWidth 6\n"
      "grant dex 100 threshold 21 year 2025 expect fail\n"
      "validate dex expect false\n"
      "revoke dex expect ok\n"
      "advance 5\n"
      "expect valid dex\n"
      "expect gas 270670\n"
      "expect records 0\n");
  ASSERT_EQ(sc.steps.size(), 11U);
  EXPECT_EQ(sc.steps[0].kind, StepKind::Genesis);
  EXPECT_EQ(sc.steps[0].number, 1'735'689'600);
  EXPECT_EQ(sc.steps[0].line, 3U);
  EXPECT_EQ(sc.steps[1].name, "alice");
  EXPECT_EQ(sc.steps[2].value, "1999");
  EXPECT_EQ(sc.steps[3].number, 6);
  const auto& g = sc.steps[4];
  EXPECT_EQ(g.kind, StepKind::Grant);
  EXPECT_EQ(g.name, "dex");
  EXPECT_EQ(g.number, 100);
  EXPECT_EQ(g.threshold, 21);
  EXPECT_EQ(g.claimed_year, 2025);
  EXPECT_EQ(g.expect, false);
  EXPECT_EQ(sc.steps[5].expect, false);
  EXPECT_EQ(sc.steps[6].expect, true);
  EXPECT_EQ(sc.steps[8].predicate, Predicate::Valid);
  EXPECT_EQ(sc.steps[9].predicate, Predicate::Gas);
  EXPECT_EQ(sc.steps[10].predicate, Predicate::Records);
}

TEST(ScenarioParse, Rejections) {
  EXPECT_EQ(parse_error_of("bogus\n"), Errc::ParseError);
  EXPECT_EQ(parse_error_of("advance ten\n"), Errc::ParseError);
  EXPECT_EQ(parse_error_of("advance\n"), Errc::ParseError);
  EXPECT_EQ(parse_error_of("setup\nsetup\n"), Errc::ParseError);
  EXPECT_EQ(parse_error_of("setup\ngenesis 5\n"), Errc::ParseError);
  EXPECT_EQ(parse_error_of("grant dex 100\n"), Errc::ParseError);
  EXPECT_EQ(parse_error_of("revoke dex\n"), Errc::ParseError);
  EXPECT_EQ(parse_error_of("setup\nvalidate dex expect maybe\n"), Errc::ParseError);
  EXPECT_EQ(parse_error_of("setup\ngrant dex 100 colour blue\n"), Errc::ParseError);
  EXPECT_EQ(parse_error_of("expect sunshine dex\n"), Errc::ParseError);
  try {
    parse_scenario("setup\n\n# c\nfrobnicate\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

constexpr std::string_view kExpiryScript =
    "set birthYear 2000\n"
    "setup\n"
    "grant dex 100\n"
    "validate dex expect true\n"
    "advance 101\n"
    "validate dex expect false\n";

TEST(Scenario, GrantExpireExitsZero) {
  const auto r = run_text(kExpiryScript);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_FALSE(r.failed_step.has_value());
  EXPECT_EQ(r.transcript.back(), "result: ok (6 steps)");
}

TEST(Scenario, ValidateOnEmptyChainFailsAtStepZero) {
  const auto r = run_text("validate dex expect true\n");
  EXPECT_EQ(r.exit_code, kExitExpectationFailed);
  EXPECT_EQ(r.failed_step, 0U);
  const auto lines = without_timing(r.transcript);
  ASSERT_GE(lines.size(), 1U);
  EXPECT_TRUE(lines[0].starts_with("FAILED [0]")) << lines[0];
}

TEST(Scenario, RevokeIsKillSwitch) {
  const auto r = run_text(
      "set birthYear 1990\n"
      "setup\n"
      "grant dex 100000\n"
      "revoke dex\n"
      "validate dex expect false\n"
      "expect records 0\n");
  EXPECT_EQ(r.exit_code, kExitOk);
}

TEST(Scenario, IneligibleGrantExpectFailIsNotSubmitted) {
  const auto r = run_text(
      "set birthYear 2015\n"
      "setup\n"
      "grant dex 100 expect fail\n"
      "expect invalid dex\n"
      "expect records 0\n");
  EXPECT_EQ(r.exit_code, kExitOk);
  const auto lines = without_timing(r.transcript);
  EXPECT_NE(lines[2].find("not submitted"), std::string::npos) << lines[2];
}

TEST(Scenario, StaleYearRejectedOnChain) {
  const auto r = run_text(
      "set birthYear 1990\n"
      "setup\n"
      "grant dex 100 year 2024 expect fail\n"
      "expect invalid dex\n");
  EXPECT_EQ(r.exit_code, kExitOk);
}

TEST(Scenario, UnexpectedModuleErrorExitsFour) {
  // No birthYear in the vault.
  const auto r = run_text("setup\ngrant dex 100\n");
  EXPECT_EQ(r.exit_code, kExitModuleError);
  EXPECT_EQ(r.failed_step, 1U);
  const auto ok_expected = run_text("set birthYear 2015\nsetup\ngrant dex 100 expect ok\n");
  EXPECT_EQ(ok_expected.exit_code, kExitExpectationFailed);
  EXPECT_EQ(ok_expected.failed_step, 2U);
}

TEST(Scenario, MultipleAccountsAreIsolated) {
  const auto r = run_text(
      "account alice\n"
      "set birthYear 1980\n"
      "account bob\n"
      "set birthYear 1985\n"
      "setup bitWidth 7\n"
      "grant dex 50\n"
      "expect valid dex\n"
      "account alice\n"
      "expect invalid dex\n"
      "grant dex 50\n"
      "expect valid dex\n"
      "revoke dex\n"
      "account bob\n"
      "expect valid dex\n"
      "expect records 1\n");
  EXPECT_EQ(r.exit_code, kExitOk);
}

TEST(Scenario, GasExpectation) {
  EXPECT_EQ(run_text("set birthYear 2000\nsetup\ngrant dex 10\nexpect gas 270670\n").exit_code, kExitOk);
  EXPECT_EQ(run_text("set birthYear 2000\nsetup\ngrant dex 10\nexpect gas 240512\n").exit_code,
            kExitExpectationFailed);
}

TEST(Scenario, TranscriptDeterministicUnderSeed) {
  const auto a = run_text(kExpiryScript);
  const auto b = run_text(kExpiryScript);
  EXPECT_EQ(without_timing(a.transcript), without_timing(b.transcript));
  EXPECT_NE(std::count_if(a.transcript.begin(), a.transcript.end(),
                          [](const auto& l) { return l.starts_with(kTimingPrefix); }),
            0);
}

TEST(Scenario, GoldenTranscript) {
  const std::vector<std::string> expected = {
      "[0] set birthYear (sealed)",
      "[1] setup bitWidth=8 constraints=10 publicInputs=3",
      "[2] grant scope=dex duration=100 threshold=18 -> ok block=1 gas=270670 expires=1735689700",
      "[3] validate scope=dex -> true",
      "[4] advance 101 -> t=1735689701",
      "[5] validate scope=dex -> false",
      "result: ok (6 steps)",
  };
  EXPECT_EQ(without_timing(run_text(kExpiryScript).transcript), expected);
}

TEST(Scenario, FileRunnerResolvesVaultRelativeToScript) {
  TempDir dir;
  {
    std::ofstream f(dir / "flow.zkc");
    f << "vault id.sdv\nset birthYear 1970\nsetup\ngrant dex 60\nexpect valid dex\n";
  }
  const auto r = run_scenario_file(dir / "flow.zkc", seeded_options());
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(dir / "id.sdv"));
  const auto missing = run_scenario_file(dir / "nope.zkc", seeded_options());
  EXPECT_EQ(missing.exit_code, kExitParseError);
}

TEST(BenchStats, MedianAndNearestRank) {
  const std::vector<double> odd = {5, 1, 3};
  EXPECT_DOUBLE_EQ(median(odd), 3);
  const std::vector<double> even = {4, 1, 3, 2};
  EXPECT_DOUBLE_EQ(median(even), 2.5);
  std::vector<double> hundred;
  for (int i = 100; i >= 1; --i) hundred.push_back(i);
  EXPECT_DOUBLE_EQ(percentile_nearest_rank(hundred, 95), 95);
  EXPECT_DOUBLE_EQ(percentile_nearest_rank(hundred, 100), 100);
  EXPECT_DOUBLE_EQ(percentile_nearest_rank(hundred, 0.5), 1);
  EXPECT_THROW(summarize(std::vector<double>{}), std::invalid_argument);
}

TEST(Bench, ReportMatchesIndependentRecomputation) {
  auto rng = seeded("bench");
  const auto rep = run_bench(20, 8, rng);
  EXPECT_EQ(rep.constraint_count, 10U);
  EXPECT_TRUE(rep.all_verified);
  ASSERT_EQ(rep.prove_samples_ms.size(), 20U);
  ASSERT_EQ(rep.verify_samples_ms.size(), 20U);

  // Recompute from the JSON document alone.
  const auto doc = nlohmann::json::parse(format_bench_json(rep));
  auto samples = doc.at("proveSamplesMs").get<std::vector<double>>();
  ASSERT_EQ(samples.size(), 20U);
  std::sort(samples.begin(), samples.end());
  const double med = (samples[9] + samples[10]) / 2;
  const double p95 = samples[static_cast<std::size_t>(std::ceil(0.95 * 20)) - 1];
  EXPECT_DOUBLE_EQ(doc.at("proveLatencyMs").at("min").get<double>(), samples.front());
  EXPECT_DOUBLE_EQ(doc.at("proveLatencyMs").at("median").get<double>(), med);
  EXPECT_DOUBLE_EQ(doc.at("proveLatencyMs").at("p95").get<double>(), p95);

  EXPECT_EQ(rep.gas_receipt.total_gas, 270'670U);
  bool saw_reference_l1 = false;
  for (const auto& q : rep.cost_quotes) {
    if (q.gas == 240'512 && q.layer == chain::Layer::L1) {
      saw_reference_l1 = true;
      EXPECT_NEAR(q.usd, 14.43, 0.01);
    }
    if (q.layer == chain::Layer::L2) {
      EXPECT_LT(q.usd, 0.50);
    }
  }
  EXPECT_TRUE(saw_reference_l1);

  const auto text = format_bench_text(rep);
  EXPECT_NE(text.find("reference"), std::string::npos);
  EXPECT_NE(text.find("200"), std::string::npos);
  EXPECT_NE(text.find("240512"), std::string::npos);
}

TEST(Bench, RequiresTwentyIterations) {
  auto rng = seeded("bench-short");
  EXPECT_THROW(run_bench(19, 8, rng), std::invalid_argument);
}

struct CliRun {
  int code;
  std::string out, err;
};

class CliTest : public ::testing::Test {
 protected:
  TempDir dir;

  CliRun run(std::vector<std::string> args, const std::string& pass = "cli-test-passphrase") {
    std::vector<std::string> full = {"zkc",
                                     "--vault",
                                     (dir / "identity.sdv").string(),
                                     "--keys",
                                     (dir / "keys").string(),
                                     "--chain",
                                     (dir / "chain.json").string(),
                                     "--passphrase",
                                     pass,
                                     "--kdf",
                                     "light",
                                     "--seed",
                                     "c0ffee"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }
};

TEST_F(CliTest, FullLifecycle) {
  ASSERT_EQ(run({"vault", "init"}).code, kExitOk);
  ASSERT_EQ(run({"vault", "set", "birthYear", "1995"}).code, kExitOk);
  const auto got = run({"vault", "get", "birthYear"});
  EXPECT_EQ(got.code, kExitOk);
  EXPECT_EQ(got.out, "1995\n");
  ASSERT_EQ(run({"setup"}).code, kExitOk);
  for (const char* f : {"pk.json", "vk.json", "cs.json", "circuit.json"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / "keys" / f)) << f;
  }
  const auto g = run({"grant", "--scope", "dex", "--duration", "100", "--genesis", "1735689600"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  EXPECT_NE(g.out.find("gas=270670"), std::string::npos) << g.out;
  EXPECT_EQ(run({"validate", "--scope", "dex"}).out, "true\n");
  EXPECT_EQ(run({"validate", "--scope", "other"}).out, "false\n");
  EXPECT_EQ(run({"advance", "100"}).code, kExitOk);
  EXPECT_EQ(run({"validate", "--scope", "dex"}).out, "false\n");
  EXPECT_EQ(run({"revoke", "--scope", "dex"}).code, kExitOk);
  const auto again = run({"--json", "revoke", "--scope", "dex"});
  EXPECT_EQ(again.code, kExitModuleError);
  const auto j = nlohmann::json::parse(again.out);
  EXPECT_EQ(j.at("error"), "NoActiveGrant");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitParseError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitParseError);
  EXPECT_EQ(run({"grant", "--scope", "dex"}).code, kExitParseError);
  EXPECT_EQ(run({"--seed", "zz", "setup"}).code, kExitParseError);
  EXPECT_EQ(run({"vault", "get", "birthYear"}).code, kExitModuleError);  // no vault yet
  EXPECT_EQ(run({"advance", "-1"}).code, kExitModuleError);              // no keys yet
  ASSERT_EQ(run({"vault", "init"}).code, kExitOk);
  EXPECT_EQ(run({"vault", "set", "birthYear", "2999"}).code, kExitModuleError);
  EXPECT_EQ(run({"vault", "get", "height"}).code, kExitModuleError);
  EXPECT_EQ(run({"vault", "get", "x"}, "wrong-passphrase").code, kExitModuleError);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ScenarioRunExitCodes) {
  {
    std::ofstream f(dir / "ok.zkc");
    f << kExpiryScript;
    std::ofstream g(dir / "fail.zkc");
    g << "validate dex expect true\n";
    std::ofstream h(dir / "bad.zkc");
    h << "grant\n";
  }
  const auto ok = run({"scenario", "run", (dir / "ok.zkc").string()});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_NE(ok.out.find("result: ok"), std::string::npos);
  EXPECT_EQ(run({"scenario", "run", (dir / "fail.zkc").string()}).code, kExitExpectationFailed);
  EXPECT_EQ(run({"scenario", "run", (dir / "bad.zkc").string()}).code, kExitParseError);
  const auto js = run({"--json", "scenario", "run", (dir / "ok.zkc").string()});
  EXPECT_EQ(js.code, kExitOk);
  EXPECT_TRUE(nlohmann::json::accept(js.out));
}

}  // namespace
}  // namespace zkc::app
