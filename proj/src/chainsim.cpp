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

#include "zkc/chainsim.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "zkc/error.hpp"
#include "zkc/hex.hpp"

namespace zkc::chain {

using Json = nlohmann::ordered_json;

std::string_view to_string(TxKind k) { return k == TxKind::Grant ? "grant" : "revoke"; }
std::string_view to_string(Layer l) { return l == Layer::L1 ? "L1" : "L2"; }

namespace {

std::uint64_t grant_calldata_bytes(std::size_t n_public) {
  // selector, proof, inputs, duration, scope
  return gas::kSelectorBytes + gas::kProofBytes + gas::kWordBytes * n_public + gas::kWordBytes + gas::kWordBytes;
}

void finish(GasReceipt& r) { r.total_gas = r.component_sum(); }

}  // namespace

GasReceipt estimate_grant_gas(std::size_t n_public_inputs) {
  GasReceipt r;
  r.kind = TxKind::Grant;
  r.intrinsic_gas = gas::kIntrinsic;
  r.calldata_gas = gas::kCalldataNonzeroByte * grant_calldata_bytes(n_public_inputs);
  r.multi_exp_gas = n_public_inputs * (gas::kEcMul + gas::kEcAdd);
  r.pairing_gas = gas::kPairingBase + gas::kGroth16Pairs * gas::kPairingPerPair;
  r.storage_gas = gas::kGrantSlots * gas::kSstoreNewSlot;
  r.overhead_gas = gas::kContractOverhead;
  r.success = true;
  finish(r);
  return r;
}

GasReceipt estimate_revoke_gas() {
  GasReceipt r;
  r.kind = TxKind::Revoke;
  r.intrinsic_gas = gas::kIntrinsic;
  r.calldata_gas = gas::kCalldataNonzeroByte * (gas::kSelectorBytes + gas::kWordBytes);
  r.storage_gas = gas::kGrantSlots * gas::kSstoreClearSlot;
  r.overhead_gas = gas::kContractOverhead;
  r.success = true;
  finish(r);
  return r;
}

CostQuote quote_cost(std::uint64_t gas, double gas_price_gwei, double eth_usd, Layer layer, double l2_factor) {
  if (gas_price_gwei < 0 || eth_usd < 0 || l2_factor < 0) throw std::invalid_argument("quote_cost: negative input");
  CostQuote q;
  q.gas = gas;
  q.gas_price_gwei = gas_price_gwei;
  q.eth_usd = eth_usd;
  q.layer = layer;
  q.layer_factor = layer == Layer::L1 ? 1.0 : l2_factor;
  q.usd = static_cast<double>(gas) * gas_price_gwei * 1e-9 * eth_usd * q.layer_factor;
  return q;
}

ChainState::ChainState(groth16::VerifyingKey vk, Timestamp genesis) : timestamp_(genesis), registry_(std::move(vk)) {}

const GasReceipt& ChainState::submit_tx(const Transaction& tx) {
  GasReceipt r;
  if (const auto* g = std::get_if<GrantTx>(&tx)) {
    const GasReceipt full = estimate_grant_gas(g->public_inputs.size());
    r = full;
    try {
      registry_.grant_access(g->caller, g->scope, g->proof, g->public_inputs, g->duration_seconds, timestamp_);
      r.success = true;
    } catch (const Error& e) {
      r.success = false;
      r.error = std::string(errc_name(e.code()));
      r.storage_gas = 0;
      if (e.code() != Errc::InvalidProof) {
        // Rejected before reaching the verifier.
        r.pairing_gas = 0;
        r.multi_exp_gas = 0;
      }
    }
  } else {
    const auto& rv = std::get<RevokeTx>(tx);
    r = estimate_revoke_gas();
    try {
      registry_.revoke_access(rv.caller, rv.scope);
      r.success = true;
    } catch (const Error& e) {
      r.success = false;
      r.error = std::string(errc_name(e.code()));
      r.storage_gas = 0;
    }
  }
  finish(r);
  r.block_number = ++block_number_;
  receipts_.push_back(std::move(r));
  return receipts_.back();
}

void ChainState::advance_time(std::int64_t dt_seconds) {
  if (dt_seconds < 0) throw Error(Errc::NegativeTimeStep, "time step " + std::to_string(dt_seconds));
  timestamp_ += dt_seconds;
}

namespace {

Json receipt_json(const GasReceipt& r) {
  Json j;
  j["block"] = r.block_number;
  j["kind"] = to_string(r.kind);
  j["success"] = r.success;
  j["error"] = r.error;
  j["intrinsicGas"] = r.intrinsic_gas;
  j["calldataGas"] = r.calldata_gas;
  j["pairingGas"] = r.pairing_gas;
  j["multiExpGas"] = r.multi_exp_gas;
  j["storageGas"] = r.storage_gas;
  j["overheadGas"] = r.overhead_gas;
  j["totalGas"] = r.total_gas;
  return j;
}

GasReceipt receipt_from(const Json& j) {
  GasReceipt r;
  r.block_number = j.at("block").get<std::uint64_t>();
  r.kind = j.at("kind").get<std::string>() == "grant" ? TxKind::Grant : TxKind::Revoke;
  r.success = j.at("success").get<bool>();
  r.error = j.at("error").get<std::string>();
  r.intrinsic_gas = j.at("intrinsicGas").get<std::uint64_t>();
  r.calldata_gas = j.at("calldataGas").get<std::uint64_t>();
  r.pairing_gas = j.at("pairingGas").get<std::uint64_t>();
  r.multi_exp_gas = j.at("multiExpGas").get<std::uint64_t>();
  r.storage_gas = j.at("storageGas").get<std::uint64_t>();
  r.overhead_gas = j.at("overheadGas").get<std::uint64_t>();
  r.total_gas = j.at("totalGas").get<std::uint64_t>();
  if (r.total_gas != r.component_sum()) throw std::invalid_argument("receipt total does not match components");
  return r;
}

template <std::size_t N>
std::array<std::uint8_t, N> fixed_from_hex(const Json& j) {
  const auto v = from_hex(j.get<std::string>());
  if (v.size() != N) throw std::invalid_argument("wrong byte length");
  std::array<std::uint8_t, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

}  // namespace

std::string ChainState::save() const {
  Json doc;
  doc["format"] = "zkc-chain-v1";
  doc["timestamp"] = timestamp_;
  doc["blockNumber"] = block_number_;
  // Sorted so identical states serialize identically.
  std::vector<registry::AccessRecord> recs;
  for (const auto& [k, rec] : registry_.records()) recs.push_back(rec);
  std::sort(recs.begin(), recs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.subject, a.scope) < std::tie(b.subject, b.scope);
  });
  doc["records"] = Json::array();
  for (const auto& r : recs) {
    doc["records"].push_back({{"subject", to_hex(r.subject.bytes)},
                              {"scope", to_hex(r.scope.bytes)},
                              {"grantedAt", r.granted_at},
                              {"expiresAt", r.expires_at},
                              {"statementDigest", to_hex(r.statement_digest)}});
  }
  doc["receipts"] = Json::array();
  for (const auto& r : receipts_) doc["receipts"].push_back(receipt_json(r));
  return doc.dump(2);
}

ChainState ChainState::load(const std::string& text, groth16::VerifyingKey vk) {
  try {
    const Json doc = Json::parse(text);
    if (doc.value("format", "") != "zkc-chain-v1") throw std::invalid_argument("not a chain snapshot");
    ChainState st(std::move(vk), doc.at("timestamp").get<Timestamp>());
    st.block_number_ = doc.at("blockNumber").get<std::uint64_t>();
    std::vector<registry::AccessRecord> recs;
    for (const auto& j : doc.at("records")) {
      registry::AccessRecord r;
      r.subject.bytes = fixed_from_hex<20>(j.at("subject"));
      r.scope.bytes = fixed_from_hex<32>(j.at("scope"));
      r.granted_at = j.at("grantedAt").get<Timestamp>();
      r.expires_at = j.at("expiresAt").get<Timestamp>();
      r.statement_digest = fixed_from_hex<32>(j.at("statementDigest"));
      recs.push_back(r);
    }
    st.registry_.restore(std::move(recs));
    for (const auto& j : doc.at("receipts")) st.receipts_.push_back(receipt_from(j));
    return st;
  } catch (const Json::exception& e) {
    throw Error(Errc::IoFailure, std::string("bad chain snapshot: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(Errc::IoFailure, std::string("bad chain snapshot: ") + e.what());
  }
}

std::string export_gas_report(std::span<const GasReceipt> receipts, const ReportPrices& prices) {
  Json doc;
  doc["format"] = "zkc-gas-report-v1";
  doc["receipts"] = Json::array();
  std::uint64_t sum = 0;
  std::uint64_t max = 0;
  for (const auto& r : receipts) {
    doc["receipts"].push_back(receipt_json(r));
    sum += r.total_gas;
    max = std::max(max, r.total_gas);
  }
  const double mean = receipts.empty() ? 0.0 : static_cast<double>(sum) / static_cast<double>(receipts.size());
  Json summary;
  summary["count"] = receipts.size();
  summary["meanTotalGas"] = mean;
  summary["maxTotalGas"] = max;
  summary["gasPriceGwei"] = prices.gas_price_gwei;
  summary["ethUsd"] = prices.eth_usd;
  const auto mean_gas = static_cast<std::uint64_t>(mean + 0.5);
  for (const Layer layer : {Layer::L1, Layer::L2}) {
    const auto q = quote_cost(mean_gas, prices.gas_price_gwei, prices.eth_usd, layer, prices.l2_factor);
    summary[std::string("meanUsd") + std::string(to_string(layer))] = q.usd;
  }
  doc["summary"] = summary;
  return doc.dump(2);
}

}  // namespace zkc::chain
