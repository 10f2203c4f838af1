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
#include <string>
#include <variant>
#include <vector>

#include "zkc/registry.hpp"

namespace zkc::chain {

using registry::Address;
using registry::ScopeId;
using registry::Timestamp;

/// EVM gas schedule (post-Istanbul precompile pricing) and the calibrated
/// overhead of the registry contract.
namespace gas {
inline constexpr std::uint64_t kIntrinsic = 21'000;
inline constexpr std::uint64_t kCalldataNonzeroByte = 16;
inline constexpr std::uint64_t kCalldataZeroByte = 4;
inline constexpr std::uint64_t kSelectorBytes = 4;
inline constexpr std::uint64_t kProofBytes = 256;
inline constexpr std::uint64_t kWordBytes = 32;
inline constexpr std::uint64_t kEcMul = 6'000;
inline constexpr std::uint64_t kEcAdd = 150;
inline constexpr std::uint64_t kPairingBase = 45'000;
inline constexpr std::uint64_t kPairingPerPair = 34'000;
inline constexpr std::uint64_t kGroth16Pairs = 4;
inline constexpr std::uint64_t kSstoreNewSlot = 20'000;
inline constexpr std::uint64_t kGrantSlots = 2;
// Clearing a warm-written slot after a cold access: 2,900 + 2,100.
inline constexpr std::uint64_t kSstoreClearSlot = 5'000;
inline constexpr std::uint64_t kContractOverhead = 3'500;  // dispatch, events, memory
}  // namespace gas

inline constexpr double kDefaultL2Factor = 1.0 / 40.0;

enum class TxKind { Grant, Revoke };
enum class Layer { L1, L2 };

std::string_view to_string(TxKind k);
std::string_view to_string(Layer l);

struct GasReceipt {
  TxKind kind = TxKind::Grant;
  std::uint64_t intrinsic_gas = 0;
  std::uint64_t calldata_gas = 0;
  std::uint64_t pairing_gas = 0;
  std::uint64_t multi_exp_gas = 0;
  std::uint64_t storage_gas = 0;
  std::uint64_t overhead_gas = 0;
  std::uint64_t total_gas = 0;
  bool success = false;
  std::string error;  // Errc name of the inner failure, empty on success
  std::uint64_t block_number = 0;

  std::uint64_t component_sum() const {
    return intrinsic_gas + calldata_gas + pairing_gas + multi_exp_gas + storage_gas + overhead_gas;
  }
  friend bool operator==(const GasReceipt&, const GasReceipt&) = default;
};

struct CostQuote {
  std::uint64_t gas = 0;
  double gas_price_gwei = 0;
  double eth_usd = 0;
  double usd = 0;
  Layer layer = Layer::L1;
  double layer_factor = 1;
};

/// Full grant transaction cost for a successful grant with n public inputs.
GasReceipt estimate_grant_gas(std::size_t n_public_inputs);
/// Successful revoke transaction cost.
GasReceipt estimate_revoke_gas();

/// usd = gas * gwei * 1e-9 * eth_usd * factor; factor is 1 on L1 and
/// `l2_factor` on L2. Throws std::invalid_argument on negative inputs.
CostQuote quote_cost(std::uint64_t gas, double gas_price_gwei, double eth_usd, Layer layer,
                     double l2_factor = kDefaultL2Factor);

struct GrantTx {
  Address caller;
  ScopeId scope;
  groth16::Proof proof;
  std::vector<algebra::Scalar> public_inputs;
  std::int64_t duration_seconds = 0;
};

struct RevokeTx {
  Address caller;
  ScopeId scope;
};

using Transaction = std::variant<GrantTx, RevokeTx>;

/// Deterministic single-writer ledger: one block per transaction, no mempool.
class ChainState {
 public:
  ChainState(groth16::VerifyingKey vk, Timestamp genesis);

  /// Applies the transaction atomically and appends a metered receipt. Inner
  /// registry failures are reported through receipt.success / receipt.error.
  const GasReceipt& submit_tx(const Transaction& tx);

  /// Throws Error(NegativeTimeStep) when dt < 0.
  void advance_time(std::int64_t dt_seconds);

  /// Free read at the current chain time.
  bool validate_access(const Address& subject, const ScopeId& scope) const {
    return registry_.validate_access(subject, scope, timestamp_);
  }

  Timestamp timestamp() const { return timestamp_; }
  std::uint64_t block_number() const { return block_number_; }
  const registry::Registry& registry() const { return registry_; }
  std::span<const GasReceipt> receipts() const { return receipts_; }

  /// JSON snapshot of time, block height, records, and receipts. The
  /// verifying key is not included.
  std::string save() const;
  static ChainState load(const std::string& text, groth16::VerifyingKey vk);

 private:
  Timestamp timestamp_;
  std::uint64_t block_number_ = 0;
  registry::Registry registry_;
  std::vector<GasReceipt> receipts_;
};

struct ReportPrices {
  double gas_price_gwei = 20;
  double eth_usd = 3000;
  double l2_factor = kDefaultL2Factor;
};

/// JSON gas report: per-receipt component table and a summary with
/// mean/max total gas and USD quotes at the given prices.
std::string export_gas_report(std::span<const GasReceipt> receipts, const ReportPrices& prices = {});

}  // namespace zkc::chain
