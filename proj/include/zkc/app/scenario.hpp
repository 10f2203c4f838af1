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

// Line-oriented lifecycle scripts. One step per line, `#` starts a comment:
//
//   genesis <unix-seconds>
//   account <label>
//   vault <path>
//   set <attribute> <value>
//   setup [bitWidth <n>]
//   grant <scope> <duration> [threshold <n>] [year <n>] [expect ok|fail]
//   validate <scope> [expect true|false]
//   revoke <scope> [expect ok|fail]
//   advance <seconds>
//   expect valid|invalid <scope>
//   expect gas <n>
//   expect records <n>
//
// docs/formats.md defines each step.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zkc/vault.hpp"

namespace zkc::app {

enum ExitCode : int {
  kExitOk = 0,
  kExitExpectationFailed = 2,
  kExitParseError = 3,
  kExitModuleError = 4,
};

inline constexpr std::int64_t kDefaultGenesis = 1'735'689'600;  // 2025-01-01T00:00:00Z
inline constexpr std::int64_t kDefaultThreshold = 18;
inline constexpr std::string_view kDefaultAccount = "user";
inline constexpr std::string_view kTimingPrefix = "timing: ";

enum class StepKind { Genesis, Account, Vault, Set, Setup, Grant, Validate, Revoke, Advance, Expect };

enum class Predicate { Valid, Invalid, Gas, Records };

struct Step {
  StepKind kind = StepKind::Genesis;
  std::size_t line = 0;         // 1-based source line
  std::string name;             // account, vault path, attribute, or scope
  std::string value;            // attribute value
  std::int64_t number = 0;      // genesis time, duration, seconds, bit width, expected count
  std::int64_t threshold = kDefaultThreshold;
  std::optional<std::int64_t> claimed_year;
  std::optional<bool> expect;   // inline `expect ok|true` / `expect fail|false`
  Predicate predicate = Predicate::Valid;
};

struct Scenario {
  std::vector<Step> steps;
};

/// Throws Error(ParseError) naming the offending line. Also rejects steps
/// that need state no earlier step establishes (grant before setup, genesis
/// after setup).
Scenario parse_scenario(std::string_view text);

struct ScenarioOptions {
  /// Fixes setup, salts, and proof randomness. Without it every run draws
  /// from the operating system.
  std::optional<std::vector<std::uint8_t>> seed;
  vault::KdfCost kdf = vault::KdfCost::light();
  std::string passphrase = "scenario-passphrase";
  /// Relative `vault` paths resolve against this directory.
  std::filesystem::path base_dir = ".";
};

struct ScenarioResult {
  int exit_code = kExitOk;
  std::optional<std::size_t> failed_step;  // 0-based step index
  std::vector<std::string> transcript;     // timing lines start with kTimingPrefix
};

ScenarioResult run_scenario(const Scenario& scenario, const ScenarioOptions& options);

/// Reads, parses, and runs; parse and I/O failures become kExitParseError.
ScenarioResult run_scenario_file(const std::filesystem::path& path, ScenarioOptions options);

}  // namespace zkc::app
