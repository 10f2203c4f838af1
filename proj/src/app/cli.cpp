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

#include "zkc/app/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zkc/app/bench.hpp"
#include "zkc/app/scenario.hpp"
#include "zkc/chainsim.hpp"
#include "zkc/circuit.hpp"
#include "zkc/error.hpp"
#include "zkc/groth16.hpp"
#include "zkc/hex.hpp"
#include "zkc/vault.hpp"

namespace zkc::app {

namespace fs = std::filesystem;
using algebra::Scalar;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string vault_path = "identity.sdv";
  std::string seed_hex;
  bool json = false;
  std::string passphrase;
  std::string keys_dir = "keys";
  std::string chain_path = "chain.json";
  std::string account{kDefaultAccount};
  std::string kdf = "interactive";
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(Errc::IoFailure, "cannot read " + p.string());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& p, const std::string& text) {
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoFailure, "cannot write " + tmp.string());
    out << text;
    if (!out) throw Error(Errc::IoFailure, "short write to " + tmp.string());
  }
  fs::rename(tmp, p);
}

std::string passphrase(const Globals& g) {
  if (!g.passphrase.empty()) return g.passphrase;
  if (const char* env = std::getenv("ZKC_VAULT_PASSPHRASE"); env != nullptr && *env != '\0') return env;
  throw UsageError("no passphrase: pass --passphrase or set ZKC_VAULT_PASSPHRASE");
}

std::unique_ptr<RandomSource> make_rng(const Globals& g) {
  if (g.seed_hex.empty()) return std::make_unique<SystemRandom>();
  std::vector<std::uint8_t> seed;
  try {
    seed = from_hex(g.seed_hex);
  } catch (const std::invalid_argument&) {
    throw UsageError("--seed must be hex");
  }
  if (seed.empty()) throw UsageError("--seed must not be empty");
  return std::make_unique<SeededRandom>(seed);
}

vault::KdfCost kdf_cost(const Globals& g) {
  return g.kdf == "light" ? vault::KdfCost::light() : vault::KdfCost::interactive();
}

registry::Timestamp wall_clock() {
  return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch())
      .count();
}

struct Keys {
  unsigned bit_width = 0;
  groth16::ProvingKey pk;
  groth16::VerifyingKey vk;
};

Keys load_keys(const Globals& g) {
  const fs::path dir = g.keys_dir;
  const auto meta = nlohmann::json::parse(read_file(dir / "circuit.json"), nullptr, false);
  if (meta.is_discarded() || !meta.contains("bitWidth")) throw Error(Errc::IoFailure, "malformed circuit.json");
  return {meta["bitWidth"].get<unsigned>(), groth16::import_pk(read_file(dir / "pk.json")),
          groth16::import_vk(read_file(dir / "vk.json"))};
}

chain::ChainState load_chain(const Globals& g, const groth16::VerifyingKey& vk, std::optional<std::int64_t> genesis) {
  if (!fs::exists(g.chain_path)) return chain::ChainState(vk, genesis.value_or(wall_clock()));
  return chain::ChainState::load(read_file(g.chain_path), vk);
}

ordered_json receipt_json(const chain::GasReceipt& r) {
  return {{"kind", chain::to_string(r.kind)}, {"success", r.success},   {"error", r.error},
          {"block", r.block_number},          {"totalGas", r.total_gas}};
}

void print_receipt(std::ostream& out, const Globals& g, const std::string& what, const chain::GasReceipt& r) {
  if (g.json) {
    out << receipt_json(r).dump() << "\n";
  } else {
    out << what << " " << (r.success ? "ok" : "failed (" + r.error + ")") << " block=" << r.block_number
        << " gas=" << r.total_gas << "\n";
  }
}

int cmd_vault_init(const Globals& g, std::ostream& out) {
  const auto f = vault::vault_init(g.vault_path, passphrase(g), kdf_cost(g));
  if (g.json) {
    out << ordered_json{{"vault", g.vault_path}, {"opslimit", f.kdf.opslimit}, {"memlimit", f.kdf.memlimit}}.dump()
        << "\n";
  } else {
    out << "created vault " << g.vault_path << "\n";
  }
  return kExitOk;
}

int cmd_vault_set(const Globals& g, const std::string& key, const std::string& value, std::ostream& out) {
  vault::AttributeValue v = value;
  std::int64_t n = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
  if (ec == std::errc() && ptr == value.data() + value.size()) v = n;
  vault::vault_put(g.vault_path, passphrase(g), key, v);
  if (!g.json) out << "stored " << key << "\n";
  return kExitOk;
}

int cmd_vault_get(const Globals& g, const std::string& key, std::ostream& out) {
  const auto v = vault::vault_get(g.vault_path, passphrase(g), key);
  if (g.json) {
    ordered_json doc;
    if (const auto* i = std::get_if<std::int64_t>(&v)) {
      doc[key] = *i;
    } else {
      doc[key] = std::get<std::string>(v);
    }
    out << doc.dump() << "\n";
  } else {
    out << vault::to_string(v) << "\n";
  }
  return kExitOk;
}

int cmd_setup(const Globals& g, unsigned bit_width, std::ostream& out) {
  const auto cs = circuit::build_age_circuit(bit_width);
  auto rng = make_rng(g);
  std::array<std::uint8_t, 32> seed{};
  rng->fill(seed);
  const auto keys = groth16::setup(cs, seed);
  const fs::path dir = g.keys_dir;
  fs::create_directories(dir);
  write_file(dir / "pk.json", groth16::export_pk(keys.pk));
  write_file(dir / "vk.json", groth16::export_vk(keys.vk));
  write_file(dir / "cs.json", circuit::export_constraint_system(cs));
  write_file(dir / "circuit.json", ordered_json{{"bitWidth", bit_width}}.dump() + "\n");
  if (g.json) {
    out << ordered_json{{"keys", g.keys_dir}, {"bitWidth", bit_width}, {"constraints", cs.num_constraints()}}.dump()
        << "\n";
  } else {
    out << "wrote keys to " << g.keys_dir << " (bitWidth=" << bit_width << ", " << cs.num_constraints()
        << " constraints)\n";
  }
  return kExitOk;
}

int cmd_grant(const Globals& g, const std::string& scope, std::int64_t duration, std::int64_t threshold,
              std::optional<std::int64_t> genesis, std::ostream& out) {
  const auto keys = load_keys(g);
  auto chain = load_chain(g, keys.vk, genesis);
  const auto birth = vault::vault_get(g.vault_path, passphrase(g), std::string(vault::kBirthYearKey));
  const auto* birth_year = std::get_if<std::int64_t>(&birth);
  if (birth_year == nullptr) throw Error(Errc::InvalidAttributeValue, "birthYear is not an integer");
  if (threshold < 0) throw UsageError("--threshold must be non-negative");

  auto rng = make_rng(g);
  const auto cs = circuit::build_age_circuit(keys.bit_width);
  const Scalar salt = vault::generate_salt(*rng);
  const circuit::AgeStatement st{Scalar::from_u64(static_cast<std::uint64_t>(registry::calendar_year(chain.timestamp()))),
                                 Scalar::from_u64(static_cast<std::uint64_t>(threshold)), salt.square()};
  const auto w = circuit::synthesize_witness(cs, st, {Scalar::from_u64(static_cast<std::uint64_t>(*birth_year)), salt});
  const auto proof = groth16::prove(keys.pk, cs, w, *rng);
  const auto pub = st.public_inputs();
  const auto& r = chain.submit_tx(chain::GrantTx{registry::Address::from_label(g.account),
                                                 registry::ScopeId::from_label(scope), proof,
                                                 {pub.begin(), pub.end()}, duration});
  write_file(g.chain_path, chain.save());
  print_receipt(out, g, "grant " + scope, r);
  return r.success ? kExitOk : kExitModuleError;
}

int cmd_validate(const Globals& g, const std::string& scope, std::ostream& out) {
  const auto keys = load_keys(g);
  const auto chain = load_chain(g, keys.vk, std::nullopt);
  const bool ok = chain.validate_access(registry::Address::from_label(g.account), registry::ScopeId::from_label(scope));
  if (g.json) {
    out << ordered_json{{"scope", scope}, {"valid", ok}, {"timestamp", chain.timestamp()}}.dump() << "\n";
  } else {
    out << (ok ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_revoke(const Globals& g, const std::string& scope, std::ostream& out) {
  const auto keys = load_keys(g);
  auto chain = load_chain(g, keys.vk, std::nullopt);
  const auto& r = chain.submit_tx(
      chain::RevokeTx{registry::Address::from_label(g.account), registry::ScopeId::from_label(scope)});
  write_file(g.chain_path, chain.save());
  print_receipt(out, g, "revoke " + scope, r);
  return r.success ? kExitOk : kExitModuleError;
}

int cmd_advance(const Globals& g, std::int64_t seconds, std::ostream& out) {
  const auto keys = load_keys(g);
  auto chain = load_chain(g, keys.vk, std::nullopt);
  chain.advance_time(seconds);
  write_file(g.chain_path, chain.save());
  if (g.json) {
    out << ordered_json{{"timestamp", chain.timestamp()}}.dump() << "\n";
  } else {
    out << "t=" << chain.timestamp() << "\n";
  }
  return kExitOk;
}

int cmd_scenario(const Globals& g, const std::string& file, std::ostream& out) {
  ScenarioOptions opt;
  if (!g.seed_hex.empty()) {
    try {
      opt.seed = from_hex(g.seed_hex);
    } catch (const std::invalid_argument&) {
      throw UsageError("--seed must be hex");
    }
    if (opt.seed->empty()) throw UsageError("--seed must not be empty");
  }
  if (!g.passphrase.empty()) opt.passphrase = g.passphrase;
  if (g.kdf == "interactive") opt.kdf = vault::KdfCost::interactive();
  const auto res = run_scenario_file(file, opt);
  if (g.json) {
    ordered_json doc = {{"exitCode", res.exit_code}, {"transcript", res.transcript}};
    doc["failedStep"] = res.failed_step ? ordered_json(*res.failed_step) : ordered_json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& l : res.transcript) out << l << "\n";
  }
  return res.exit_code;
}

int cmd_bench(const Globals& g, std::size_t iterations, unsigned bit_width, std::ostream& out) {
  if (iterations < kMinBenchIterations) throw UsageError("--iterations must be at least 20");
  auto rng = make_rng(g);
  const auto rep = run_bench(iterations, bit_width, *rng);
  out << (g.json ? format_bench_json(rep) : format_bench_text(rep));
  return rep.all_verified ? kExitOk : kExitModuleError;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Selective-disclosure age proofs against a simulated access registry", "zkc"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--vault", g.vault_path, "Vault file")->capture_default_str();
  app.add_option("--seed", g.seed_hex, "Hex seed for deterministic randomness");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--passphrase", g.passphrase, "Vault passphrase (default: $ZKC_VAULT_PASSPHRASE)");
  app.add_option("--keys", g.keys_dir, "Key directory")->capture_default_str();
  app.add_option("--chain", g.chain_path, "Chain state file")->capture_default_str();
  app.add_option("--account", g.account, "Account label")->capture_default_str();
  app.add_option("--kdf", g.kdf, "Vault KDF cost")->check(CLI::IsMember({"interactive", "light"}))->capture_default_str();

  std::function<int()> action;

  auto* vault_cmd = app.add_subcommand("vault", "Manage the identity vault")->require_subcommand(1);
  vault_cmd->add_subcommand("init", "Create an empty vault")->callback([&] { action = [&] { return cmd_vault_init(g, out); }; });
  std::string attr_key, attr_value;
  auto* vset = vault_cmd->add_subcommand("set", "Store an attribute");
  vset->add_option("key", attr_key)->required();
  vset->add_option("value", attr_value)->required();
  vset->callback([&] { action = [&] { return cmd_vault_set(g, attr_key, attr_value, out); }; });
  auto* vget = vault_cmd->add_subcommand("get", "Read an attribute");
  vget->add_option("key", attr_key)->required();
  vget->callback([&] { action = [&] { return cmd_vault_get(g, attr_key, out); }; });

  unsigned bit_width = circuit::kDefaultBitWidth;
  auto* setup_cmd = app.add_subcommand("setup", "Generate proving and verifying keys");
  setup_cmd->add_option("--bit-width", bit_width, "Range-check width")->capture_default_str();
  setup_cmd->callback([&] { action = [&] { return cmd_setup(g, bit_width, out); }; });

  std::string scope;
  std::int64_t duration = 0;
  std::int64_t threshold = kDefaultThreshold;
  std::optional<std::int64_t> genesis;
  auto* grant_cmd = app.add_subcommand("grant", "Prove eligibility and submit a grant");
  grant_cmd->add_option("--scope", scope)->required();
  grant_cmd->add_option("--duration", duration, "Seconds")->required();
  grant_cmd->add_option("--threshold", threshold)->capture_default_str();
  grant_cmd->add_option("--genesis", genesis, "Chain start time when creating a new chain file");
  grant_cmd->callback([&] { action = [&] { return cmd_grant(g, scope, duration, threshold, genesis, out); }; });

  auto* validate_cmd = app.add_subcommand("validate", "Query the registry");
  validate_cmd->add_option("--scope", scope)->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(g, scope, out); }; });

  auto* revoke_cmd = app.add_subcommand("revoke", "Delete a grant");
  revoke_cmd->add_option("--scope", scope)->required();
  revoke_cmd->callback([&] { action = [&] { return cmd_revoke(g, scope, out); }; });

  std::int64_t seconds = 0;
  auto* advance_cmd = app.add_subcommand("advance", "Move chain time forward");
  advance_cmd->add_option("seconds", seconds)->required();
  advance_cmd->callback([&] { action = [&] { return cmd_advance(g, seconds, out); }; });

  std::string script;
  auto* scenario_cmd = app.add_subcommand("scenario", "Lifecycle scripts")->require_subcommand(1);
  auto* run_cmd = scenario_cmd->add_subcommand("run", "Run a scenario file");
  run_cmd->add_option("file", script)->required();
  run_cmd->callback([&] { action = [&] { return cmd_scenario(g, script, out); }; });

  std::size_t iterations = kMinBenchIterations;
  unsigned bench_width = circuit::kDefaultBitWidth;
  auto* bench_cmd = app.add_subcommand("bench", "Latency and cost report");
  bench_cmd->add_option("--iterations", iterations)->capture_default_str();
  bench_cmd->add_option("--bit-width", bench_width)->capture_default_str();
  bench_cmd->callback([&] { action = [&] { return cmd_bench(g, iterations, bench_width, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "zkc: " << e.what() << "\n";
    return kExitParseError;
  }

  if (!action) {
    err << app.help();
    return kExitParseError;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "zkc: " << e.what() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    err << "zkc: " << e.what() << "\n";
    if (e.code() == Errc::ParseError) return kExitParseError;
    if (e.code() == Errc::ExpectationFailed) return kExitExpectationFailed;
    return kExitModuleError;
  } catch (const std::exception& e) {
    err << "zkc: " << e.what() << "\n";
    return kExitModuleError;
  }
}

}  // namespace zkc::app
