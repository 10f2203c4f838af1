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

#include "zkc/app/scenario.hpp"

#include <chrono>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "zkc/chainsim.hpp"
#include "zkc/circuit.hpp"
#include "zkc/error.hpp"
#include "zkc/groth16.hpp"
#include "zkc/hex.hpp"
#include "zkc/rng.hpp"

namespace zkc::app {

namespace fs = std::filesystem;
using algebra::Scalar;

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::int64_t parse_int(std::string_view tok, std::size_t line, bool allow_negative = false) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) parse_fail(line, "expected an integer, got '" + std::string(tok) + "'");
  if (!allow_negative && v < 0) parse_fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

bool parse_outcome(std::string_view tok, std::string_view yes, std::string_view no, std::size_t line) {
  if (tok == yes) return true;
  if (tok == no) return false;
  parse_fail(line, "expect takes '" + std::string(yes) + "' or '" + std::string(no) + "'");
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// Trailing `key value` pairs after the positional arguments.
void parse_options(Step& step, const std::vector<std::string>& tok, std::size_t first, std::string_view yes,
                   std::string_view no) {
  for (std::size_t i = first; i < tok.size(); i += 2) {
    if (i + 1 >= tok.size()) parse_fail(step.line, "option '" + tok[i] + "' needs a value");
    const std::string& key = tok[i];
    const std::string& val = tok[i + 1];
    if (key == "expect") {
      step.expect = parse_outcome(val, yes, no, step.line);
    } else if (key == "threshold" && step.kind == StepKind::Grant) {
      step.threshold = parse_int(val, step.line);
    } else if (key == "year" && step.kind == StepKind::Grant) {
      step.claimed_year = parse_int(val, step.line);
    } else if (key == "bitWidth" && step.kind == StepKind::Setup) {
      step.number = parse_int(val, step.line);
    } else {
      parse_fail(step.line, "unknown option '" + key + "'");
    }
  }
}

void require_args(const std::vector<std::string>& tok, std::size_t n, std::size_t line, std::string_view usage) {
  if (tok.size() < n) parse_fail(line, "usage: " + std::string(usage));
}

Step parse_line(const std::vector<std::string>& tok, std::size_t line) {
  Step s;
  s.line = line;
  const std::string& cmd = tok[0];
  if (cmd == "genesis") {
    s.kind = StepKind::Genesis;
    require_args(tok, 2, line, "genesis <unix-seconds>");
    s.number = parse_int(tok[1], line);
    if (tok.size() > 2) parse_fail(line, "unexpected arguments");
  } else if (cmd == "account") {
    s.kind = StepKind::Account;
    require_args(tok, 2, line, "account <label>");
    s.name = tok[1];
    if (tok.size() > 2) parse_fail(line, "unexpected arguments");
  } else if (cmd == "vault") {
    s.kind = StepKind::Vault;
    require_args(tok, 2, line, "vault <path>");
    s.name = tok[1];
    if (tok.size() > 2) parse_fail(line, "unexpected arguments");
  } else if (cmd == "set") {
    s.kind = StepKind::Set;
    require_args(tok, 3, line, "set <attribute> <value>");
    s.name = tok[1];
    s.value = tok[2];
    if (tok.size() > 3) parse_fail(line, "unexpected arguments");
  } else if (cmd == "setup") {
    s.kind = StepKind::Setup;
    s.number = circuit::kDefaultBitWidth;
    parse_options(s, tok, 1, "ok", "fail");
    if (s.expect) parse_fail(line, "setup does not take expect");
  } else if (cmd == "grant") {
    s.kind = StepKind::Grant;
    require_args(tok, 3, line, "grant <scope> <duration> [threshold <n>] [year <n>] [expect ok|fail]");
    s.name = tok[1];
    s.number = parse_int(tok[2], line, true);
    parse_options(s, tok, 3, "ok", "fail");
  } else if (cmd == "validate") {
    s.kind = StepKind::Validate;
    require_args(tok, 2, line, "validate <scope> [expect true|false]");
    s.name = tok[1];
    parse_options(s, tok, 2, "true", "false");
  } else if (cmd == "revoke") {
    s.kind = StepKind::Revoke;
    require_args(tok, 2, line, "revoke <scope> [expect ok|fail]");
    s.name = tok[1];
    parse_options(s, tok, 2, "ok", "fail");
  } else if (cmd == "advance") {
    s.kind = StepKind::Advance;
    require_args(tok, 2, line, "advance <seconds>");
    s.number = parse_int(tok[1], line, true);
    if (tok.size() > 2) parse_fail(line, "unexpected arguments");
  } else if (cmd == "expect") {
    s.kind = StepKind::Expect;
    require_args(tok, 3, line, "expect valid|invalid <scope> | expect gas|records <n>");
    if (tok.size() > 3) parse_fail(line, "unexpected arguments");
    if (tok[1] == "valid" || tok[1] == "invalid") {
      s.predicate = tok[1] == "valid" ? Predicate::Valid : Predicate::Invalid;
      s.name = tok[2];
    } else if (tok[1] == "gas" || tok[1] == "records") {
      s.predicate = tok[1] == "gas" ? Predicate::Gas : Predicate::Records;
      s.number = parse_int(tok[2], line);
    } else {
      parse_fail(line, "unknown predicate '" + tok[1] + "'");
    }
  } else {
    parse_fail(line, "unknown step '" + cmd + "'");
  }
  return s;
}

struct ExpectationFailure {
  std::string message;
};

// A registry-level failure that no `expect fail` anticipated.
struct UnexpectedFailure {
  std::string message;
};

class TempDir {
 public:
  TempDir() = default;
  ~TempDir() {
    if (!path_.empty()) {
      std::error_code ec;
      fs::remove_all(path_, ec);
    }
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& get() {
    if (path_.empty()) {
      std::string tmpl = (fs::temp_directory_path() / "zkc-scenario-XXXXXX").string();
      if (::mkdtemp(tmpl.data()) == nullptr) throw Error(Errc::IoFailure, "cannot create temporary directory");
      path_ = tmpl;
    }
    return path_;
  }

 private:
  fs::path path_;
};

std::string address_hex(const registry::Address& a) { return "0x" + to_hex(a.bytes); }

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

class Runner {
 public:
  explicit Runner(const ScenarioOptions& opt) : opt_(opt) {
    if (opt.seed) {
      rng_ = std::make_unique<SeededRandom>(*opt.seed);
    } else {
      rng_ = std::make_unique<SystemRandom>();
    }
  }

  ScenarioResult run(const Scenario& sc) {
    ScenarioResult res;
    for (std::size_t i = 0; i < sc.steps.size(); ++i) {
      index_ = i;
      try {
        exec(sc.steps[i]);
      } catch (const ExpectationFailure& f) {
        return fail(res, i, kExitExpectationFailed, "FAILED [" + std::to_string(i) + "] " + f.message);
      } catch (const UnexpectedFailure& f) {
        return fail(res, i, kExitModuleError, "ERROR [" + std::to_string(i) + "] " + f.message);
      } catch (const std::exception& e) {
        return fail(res, i, kExitModuleError, "ERROR [" + std::to_string(i) + "] " + e.what());
      }
    }
    lines_.push_back("result: ok (" + std::to_string(sc.steps.size()) + " steps)");
    res.transcript = std::move(lines_);
    return res;
  }

 private:
  ScenarioResult fail(ScenarioResult& res, std::size_t i, int code, std::string msg) {
    lines_.push_back(std::move(msg));
    lines_.push_back(code == kExitExpectationFailed ? "result: expectation failed at step " + std::to_string(i)
                                                    : "result: error at step " + std::to_string(i));
    res.exit_code = code;
    res.failed_step = i;
    res.transcript = std::move(lines_);
    return res;
  }

  void say(const std::string& s) { lines_.push_back("[" + std::to_string(index_) + "] " + s); }
  void timing(const std::string& what, double ms) {
    lines_.push_back(std::string(kTimingPrefix) + "[" + std::to_string(index_) + "] " + what + " " + fmt_ms(ms) +
                     " ms");
  }

  registry::Timestamp now() const { return chain_ ? chain_->timestamp() : genesis_; }

  const fs::path& vault_for_account() {
    auto it = vaults_.find(account_);
    if (it != vaults_.end()) return it->second;
    const fs::path p = tmp_.get() / ("vault-" + std::to_string(vaults_.size()) + ".sdv");
    vault::vault_init(p, opt_.passphrase, opt_.kdf);
    return vaults_.emplace(account_, p).first->second;
  }

  void check_expect(const Step& s, bool actual, std::string_view yes, std::string_view no, const std::string& what) {
    if (s.expect && *s.expect != actual) {
      throw ExpectationFailure{what + " -> " + std::string(actual ? yes : no) + ", expected " +
                               std::string(*s.expect ? yes : no)};
    }
  }

  void exec(const Step& s) {
    switch (s.kind) {
      case StepKind::Genesis:
        genesis_ = s.number;
        say("genesis " + std::to_string(s.number) + " year=" + std::to_string(registry::calendar_year(s.number)));
        break;
      case StepKind::Account:
        account_ = s.name;
        say("account " + s.name + " address=" + address_hex(registry::Address::from_label(s.name)));
        break;
      case StepKind::Vault: exec_vault(s); break;
      case StepKind::Set: exec_set(s); break;
      case StepKind::Setup: exec_setup(s); break;
      case StepKind::Grant: exec_grant(s); break;
      case StepKind::Validate: {
        const bool ok = chain_ && chain_->validate_access(registry::Address::from_label(account_),
                                                          registry::ScopeId::from_label(s.name));
        const std::string what = "validate scope=" + s.name;
        check_expect(s, ok, "true", "false", what);
        say(what + " -> " + (ok ? "true" : "false"));
        break;
      }
      case StepKind::Revoke: exec_revoke(s); break;
      case StepKind::Advance:
        if (chain_) {
          chain_->advance_time(s.number);
        } else {
          if (s.number < 0) throw Error(Errc::NegativeTimeStep, "cannot move time backwards");
          genesis_ += s.number;
        }
        say("advance " + std::to_string(s.number) + " -> t=" + std::to_string(now()));
        break;
      case StepKind::Expect: exec_expect(s); break;
    }
  }

  void exec_vault(const Step& s) {
    fs::path p = s.name;
    if (p.is_relative()) p = opt_.base_dir / p;
    if (fs::exists(p)) {
      vault::vault_open(p, opt_.passphrase);
      say("vault " + s.name + " opened");
    } else {
      vault::vault_init(p, opt_.passphrase, opt_.kdf);
      say("vault " + s.name + " created");
    }
    vaults_[account_] = p;
  }

  void exec_set(const Step& s) {
    vault::AttributeValue v = s.value;
    std::int64_t n = 0;
    const auto [ptr, ec] = std::from_chars(s.value.data(), s.value.data() + s.value.size(), n);
    if (ec == std::errc() && ptr == s.value.data() + s.value.size()) v = n;
    vault::vault_put(vault_for_account(), opt_.passphrase, s.name, v, registry::calendar_year(now()));
    say("set " + s.name + " (sealed)");
  }

  void exec_setup(const Step& s) {
    const auto t0 = std::chrono::steady_clock::now();
    cs_.emplace(circuit::build_age_circuit(static_cast<unsigned>(s.number)));
    std::array<std::uint8_t, 32> seed{};
    rng_->fill(seed);
    auto keys = groth16::setup(*cs_, seed);
    const auto t1 = std::chrono::steady_clock::now();
    pk_.emplace(std::move(keys.pk));
    chain_.emplace(std::move(keys.vk), genesis_);
    say("setup bitWidth=" + std::to_string(s.number) + " constraints=" + std::to_string(cs_->num_constraints()) +
        " publicInputs=" + std::to_string(cs_->num_public()));
    timing("setup", std::chrono::duration<double, std::milli>(t1 - t0).count());
  }

  void exec_grant(const Step& s) {
    const std::string what = "grant scope=" + s.name + " duration=" + std::to_string(s.number) +
                             " threshold=" + std::to_string(s.threshold);
    const auto birth = vault::vault_get(vault_for_account(), opt_.passphrase, std::string(vault::kBirthYearKey));
    const auto* birth_year = std::get_if<std::int64_t>(&birth);
    if (birth_year == nullptr) throw Error(Errc::InvalidAttributeValue, "birthYear is not an integer");

    const std::int64_t year = s.claimed_year.value_or(registry::calendar_year(now()));
    const Scalar salt = vault::generate_salt(*rng_);
    const circuit::AgeStatement st{Scalar::from_u64(static_cast<std::uint64_t>(year)),
                                   Scalar::from_u64(static_cast<std::uint64_t>(s.threshold)), salt.square()};

    const auto t0 = std::chrono::steady_clock::now();
    circuit::WitnessVector w;
    try {
      w = circuit::synthesize_witness(*cs_, st, {Scalar::from_u64(static_cast<std::uint64_t>(*birth_year)), salt});
    } catch (const Error& e) {
      if (!s.expect) throw;
      const std::string outcome = what + " -> fail (" + std::string(errc_name(e.code())) + ", not submitted)";
      if (*s.expect) throw ExpectationFailure{outcome + ", expected ok"};
      say(outcome);
      return;
    }
    const auto proof = groth16::prove(*pk_, *cs_, w, *rng_);
    const auto t1 = std::chrono::steady_clock::now();

    const auto pub = st.public_inputs();
    const auto& r = chain_->submit_tx(chain::GrantTx{registry::Address::from_label(account_),
                                                     registry::ScopeId::from_label(s.name), proof,
                                                     {pub.begin(), pub.end()}, s.number});
    report_receipt(s, what, r);
    timing("prove", std::chrono::duration<double, std::milli>(t1 - t0).count());
  }

  void exec_revoke(const Step& s) {
    const std::string what = "revoke scope=" + s.name;
    const auto& r = chain_->submit_tx(
        chain::RevokeTx{registry::Address::from_label(account_), registry::ScopeId::from_label(s.name)});
    report_receipt(s, what, r);
  }

  void report_receipt(const Step& s, const std::string& what, const chain::GasReceipt& r) {
    check_expect(s, r.success, "ok", "fail", what);
    std::string line = what + " -> " + (r.success ? "ok" : "fail (" + r.error + ")") +
                       " block=" + std::to_string(r.block_number) + " gas=" + std::to_string(r.total_gas);
    if (!r.success && !s.expect) throw UnexpectedFailure{line};
    if (r.success && r.kind == chain::TxKind::Grant) {
      const auto rec = chain_->registry().find(registry::Address::from_label(account_),
                                               registry::ScopeId::from_label(s.name));
      line += " expires=" + std::to_string(rec->expires_at);
    }
    say(line);
  }

  void exec_expect(const Step& s) {
    switch (s.predicate) {
      case Predicate::Valid:
      case Predicate::Invalid: {
        const bool ok = chain_ && chain_->validate_access(registry::Address::from_label(account_),
                                                          registry::ScopeId::from_label(s.name));
        const bool want = s.predicate == Predicate::Valid;
        const std::string what = std::string("expect ") + (want ? "valid" : "invalid") + " scope=" + s.name;
        if (ok != want) throw ExpectationFailure{what + " -> access is " + (ok ? "valid" : "invalid")};
        say(what + " -> ok");
        break;
      }
      case Predicate::Gas: {
        const std::string what = "expect gas " + std::to_string(s.number);
        if (!chain_ || chain_->receipts().empty()) throw ExpectationFailure{what + " -> no receipts"};
        const auto got = chain_->receipts().back().total_gas;
        if (got != static_cast<std::uint64_t>(s.number)) {
          throw ExpectationFailure{what + " -> last receipt used " + std::to_string(got)};
        }
        say(what + " -> ok");
        break;
      }
      case Predicate::Records: {
        const std::string what = "expect records " + std::to_string(s.number);
        const std::size_t got = chain_ ? chain_->registry().records().size() : 0;
        if (got != static_cast<std::size_t>(s.number)) {
          throw ExpectationFailure{what + " -> registry holds " + std::to_string(got)};
        }
        say(what + " -> ok");
        break;
      }
    }
  }

  const ScenarioOptions& opt_;
  std::unique_ptr<RandomSource> rng_;
  TempDir tmp_;
  std::vector<std::string> lines_;
  std::size_t index_ = 0;
  registry::Timestamp genesis_ = kDefaultGenesis;
  std::string account_{kDefaultAccount};
  std::map<std::string, fs::path> vaults_;
  std::optional<circuit::ConstraintSystem> cs_;
  std::optional<groth16::ProvingKey> pk_;
  std::optional<chain::ChainState> chain_;
};

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  bool have_setup = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tok = tokenize(raw);
    if (tok.empty()) continue;
    Step s = parse_line(tok, line_no);
    switch (s.kind) {
      case StepKind::Genesis:
        if (have_setup) parse_fail(line_no, "genesis must precede setup");
        break;
      case StepKind::Setup:
        if (have_setup) parse_fail(line_no, "setup may appear only once");
        have_setup = true;
        break;
      case StepKind::Grant:
      case StepKind::Revoke:
        if (!have_setup) parse_fail(line_no, tok[0] + " requires an earlier setup step");
        break;
      default:
        break;
    }
    sc.steps.push_back(std::move(s));
  }
  return sc;
}

ScenarioResult run_scenario(const Scenario& scenario, const ScenarioOptions& options) {
  Runner runner(options);
  return runner.run(scenario);
}

ScenarioResult run_scenario_file(const fs::path& path, ScenarioOptions options) {
  std::ifstream in(path);
  if (!in) return {kExitParseError, std::nullopt, {"PARSE ERROR: cannot read " + path.string()}};
  std::stringstream buf;
  buf << in.rdbuf();
  if (options.base_dir == ".") options.base_dir = path.parent_path();
  try {
    return run_scenario(parse_scenario(buf.str()), options);
  } catch (const Error& e) {
    if (e.code() != Errc::ParseError) throw;
    return {kExitParseError, std::nullopt, {std::string("PARSE ERROR: ") + e.what()}};
  }
}

}  // namespace zkc::app
